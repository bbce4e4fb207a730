// Copyright 2026 The qmaps Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qmaps/detection.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "qmaps/errors.hpp"
#include "qmaps/witness.hpp"

namespace qmaps {

Spectrum ppt_spectrum(const DensityMatrix& rho) {
  return hermitian_eigenvalues(partial_transpose(rho.matrix(), rho.dims(), Subsystem::B));
}

MapVerdict map_detects(const QutritMapSpec& map, const DensityMatrix& rho) {
  if (rho.dims() != kQutritPair) throw DimensionError("map_detects: state must be two-qutrit");
  const double min_eig = hermitian_eigenvalues(extend_one_sided(map, rho.matrix())).min();
  return {map.label(), min_eig, min_eig < kNegativeEigenvalue};
}

namespace {

void require_tau_domain(double alpha, double x) {
  require_alpha(alpha);
  validate(StateFamilyPoint{StateFamily::TauX, x});
}

double d_tau_bracket(double alpha, double x) {
  return x * (2.0 + x) * (alpha + x / alpha) - alpha * (1.0 + x);
}

}  // namespace

double minor_d_tau(double alpha, double x) {
  require_tau_domain(alpha, x);
  const double n = 1.0 / (alpha + 1.0 / alpha);
  return n * d_tau_bracket(alpha, x) / (3.0 * (1.0 + x + 1.0 / x));
}

double tau_principal_minor(double alpha, double x) {
  require_tau_domain(alpha, x);
  const ComplexMatrix image = extend_one_sided(QutritMapSpec::lambda_alpha(alpha), tau_x(x).matrix());
  constexpr std::array<std::size_t, 3> rows{0, 4, 8};
  return determinant(principal_submatrix(image, rows)).real();
}

std::optional<double> minor_d_tau_root(double alpha, double lo, double hi, double tolerance) {
  double f_lo = minor_d_tau(alpha, lo);
  const double f_hi = minor_d_tau(alpha, hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo < 0.0) == (f_hi < 0.0)) return std::nullopt;
  for (int it = 0; it < 200 && hi - lo > tolerance; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = minor_d_tau(alpha, mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::optional<double> dual_npt_threshold(double alpha, double x_max, double tolerance) {
  require_alpha(alpha);
  const QutritMapSpec dual = QutritMapSpec::lambda_alpha_dual(alpha);
  auto negative = [&](double x) {
    return hermitian_eigenvalues(extend_one_sided(dual, tau_x(x).matrix())).min() < 0.0;
  };
  if (negative(1.0)) return 1.0;
  double prev = 1.0;
  constexpr int kSteps = 400;
  const double ratio = std::pow(x_max, 1.0 / kSteps);
  for (int k = 1; k <= kSteps; ++k) {
    const double x = std::pow(ratio, k);
    if (!negative(x)) {
      prev = x;
      continue;
    }
    double lo = prev;
    double hi = x;
    while (hi - lo > tolerance) {
      const double mid = 0.5 * (lo + hi);
      (negative(mid) ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
  }
  return std::nullopt;
}

CmcReport cmc_check(const DensityMatrix& rho) {
  if (rho.dims() != kQutritPair) throw DimensionError("cmc_check: state must be two-qutrit");
  const GellMannBasis& basis = gellmann_basis();
  std::array<ComplexMatrix, 9> h;
  for (std::size_t k = 0; k < 9; ++k) h[k] = basis.matrices[k] * (1.0 / std::sqrt(basis.norms[k]));

  const auto [rho_a, rho_b] = reduced_pair(rho);
  std::array<double, 9> mean_a{};
  std::array<double, 9> mean_b{};
  for (std::size_t k = 0; k < 9; ++k) {
    mean_a[k] = hs_inner(h[k], rho_a.matrix()).real();
    mean_b[k] = hs_inner(h[k], rho_b.matrix()).real();
  }

  CmcReport report;
  report.c_matrix = RealMatrix(9, 9);
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j) {
      const double joint = hs_inner(kron(h[i], h[j]), rho.matrix()).real();
      report.c_matrix(i, j) = joint - mean_a[i] * mean_b[j];
    }
  report.lhs = trace_norm(report.c_matrix.to_complex());
  report.rhs = std::sqrt(std::max(0.0, (1.0 - rho_a.purity()) * (1.0 - rho_b.purity())));
  report.violated = report.lhs > report.rhs + 1e-12;
  return report;
}

DetectionReport full_report(const DensityMatrix& rho) {
  DetectionReport report;
  report.ppt_spectrum = ppt_spectrum(rho);
  report.ppt_min_eig = report.ppt_spectrum.min();
  report.npt = report.ppt_min_eig < kNegativeEigenvalue;
  for (const QutritMapSpec& map : {QutritMapSpec::lambda_alpha(1.0), QutritMapSpec::lambda_alpha_dual(1.0),
                                   QutritMapSpec::choi_map(), QutritMapSpec::miller_olkiewicz()}) {
    report.map_verdicts.push_back(map_detects(map, rho));
  }
  const WitnessOperator witness = WitnessOperator::from_map(QutritMapSpec::lambda_alpha(1.0));
  const double value = witness_value(witness, rho);
  report.witness_values.push_back({witness.label(), value, value < kNegativeEigenvalue});
  report.cmc = cmc_check(rho);
  return report;
}

}  // namespace qmaps
