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

#include "qmaps/states.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include "qmaps/choi.hpp"
#include "qmaps/errors.hpp"
#include "qmaps/maps.hpp"
#include "qmaps/spectral.hpp"

namespace qmaps {

std::string_view to_string(StateFamily family) {
  switch (family) {
    case StateFamily::TauX:
      return "tau-x";
    case StateFamily::SpaChoi:
      return "spa-choi";
    case StateFamily::MaxEntangled:
      return "max-entangled";
  }
  return "unknown";
}

StateFamily state_family_from_string(std::string_view name) {
  if (name == "tau-x") return StateFamily::TauX;
  if (name == "spa-choi") return StateFamily::SpaChoi;
  if (name == "max-entangled") return StateFamily::MaxEntangled;
  throw std::invalid_argument("unknown state family '" + std::string(name) + "'");
}

void validate(const StateFamilyPoint& point) {
  std::ostringstream os;
  switch (point.family) {
    case StateFamily::TauX:
      if (!(point.parameter > 0.0) || !std::isfinite(point.parameter)) {
        os << "tau-x requires x > 0, got " << point.parameter;
        throw DomainError(os.str());
      }
      return;
    case StateFamily::SpaChoi:
      require_alpha(point.parameter);
      return;
    case StateFamily::MaxEntangled:
      if (!(point.parameter >= 2.0) || point.parameter != std::floor(point.parameter)) {
        os << "max-entangled requires an integer d >= 2, got " << point.parameter;
        throw DomainError(os.str());
      }
      return;
  }
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, BipartiteDims dims,
                             std::optional<StateFamilyPoint> provenance)
    : matrix_(std::move(matrix)), dims_(dims), provenance_(provenance) {
  if (matrix_.dim() != dims_.total() || matrix_.dim() == 0) {
    throw ValidationError("dimension", static_cast<double>(matrix_.dim()),
                          "matrix dim " + std::to_string(matrix_.dim()) + " does not match " +
                              std::to_string(dims_.a) + "x" + std::to_string(dims_.b));
  }
  const double herm = matrix_.hermiticity_defect();
  const double herm_allowed = kHermiticityTolerance * matrix_.max_abs();
  if (herm > herm_allowed) {
    throw ValidationError("hermitian", herm - herm_allowed,
                          "hermiticity defect " + std::to_string(herm));
  }
  const Complex tr = matrix_.trace();
  const double trace_gap = std::abs(tr - 1.0);
  if (trace_gap > kTraceTolerance) {
    std::ostringstream os;
    os.precision(17);
    os << "trace is " << tr.real() << (tr.imag() != 0.0 ? " (complex)" : "") << ", expected 1";
    throw ValidationError("unit-trace", trace_gap, os.str());
  }
  const double min_eig = hermitian_eigenvalues(matrix_).min();
  if (min_eig < -kPsdTolerance) {
    std::ostringstream os;
    os << "minimum eigenvalue " << min_eig << " is negative";
    throw ValidationError("positive-semidefinite", -kPsdTolerance - min_eig, os.str());
  }
}

double DensityMatrix::purity() const { return hs_inner(matrix_, matrix_).real(); }

DensityMatrix max_entangled(std::size_t d) {
  if (d < 2) throw DomainError("max_entangled: d must be >= 2");
  return DensityMatrix(max_entangled_projector(d), BipartiteDims{d, d},
                       StateFamilyPoint{StateFamily::MaxEntangled, static_cast<double>(d)});
}

DensityMatrix tau_x(double x) {
  validate(StateFamilyPoint{StateFamily::TauX, x});
  ComplexMatrix t(9);
  for (std::size_t i : {0, 4, 8})
    for (std::size_t j : {0, 4, 8}) t(i, j) = 1.0;
  t(1, 1) = x;
  t(2, 2) = 1.0 / x;
  t(3, 3) = 1.0 / x;
  t(5, 5) = x;
  t(6, 6) = x;
  t(7, 7) = 1.0 / x;
  t *= 1.0 / (3.0 * (1.0 + x + 1.0 / x));
  return DensityMatrix(std::move(t), kQutritPair, StateFamilyPoint{StateFamily::TauX, x});
}

ComplexMatrix spa_choi_closed_form(double alpha) {
  require_alpha(alpha);
  const double a2 = alpha * alpha;
  const double s = std::sqrt(4.0 * a2 + 1.0);
  const double den = 6.0 * a2 + 9.0 * s - 3.0;
  const double corner = (2.0 * a2 + s - 1.0) / den;
  const double low = (s - 1.0) / den;
  const double high = (s + 1.0) / den;
  const double coherence = 2.0 * alpha / (-den);
  const double far = 2.0 * a2 / (-den);

  ComplexMatrix c(9);
  const double diag[9] = {corner, low, high, corner, high, low, low, high, corner};
  for (std::size_t i = 0; i < 9; ++i) c(i, i) = diag[i];
  c(0, 4) = c(4, 0) = coherence;
  c(0, 8) = c(8, 0) = far;
  c(5, 7) = c(7, 5) = coherence;
  return c;
}

DensityMatrix spa_choi_state(double alpha) {
  ComplexMatrix closed = spa_choi_closed_form(alpha);
  const double gap = max_abs_diff(closed, choi_of(QutritMapSpec::spa(alpha)).matrix);
  if (gap > 1e-12) {
    throw std::logic_error("spa_choi_state: closed form disagrees with choi_of(spa) by " +
                           std::to_string(gap));
  }
  return DensityMatrix(std::move(closed), kQutritPair, StateFamilyPoint{StateFamily::SpaChoi, alpha});
}

std::pair<DensityMatrix, DensityMatrix> reduced_pair(const DensityMatrix& rho) {
  const BipartiteDims dims = rho.dims();
  return {DensityMatrix(partial_trace(rho.matrix(), dims, Subsystem::A), BipartiteDims{dims.a, 1}),
          DensityMatrix(partial_trace(rho.matrix(), dims, Subsystem::B), BipartiteDims{dims.b, 1})};
}

}  // namespace qmaps
