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

#include "qmaps/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qmaps/errors.hpp"

namespace qmaps {

double Spectrum::sum() const { return std::accumulate(eigenvalues.begin(), eigenvalues.end(), 0.0); }

std::size_t Spectrum::count_below(double threshold) const {
  return static_cast<std::size_t>(
      std::count_if(eigenvalues.begin(), eigenvalues.end(), [&](double v) { return v < threshold; }));
}

namespace {

double off_diagonal_mass(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// One unitary plane rotation that annihilates a(p, q). The rotation is the
// real Jacobi rotation conjugated by a phase on q that makes a(p, q) real.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const Complex e = apq / r;
  const Complex ec = std::conj(e);

  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * r);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const std::size_t n = a.dim();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp - s * ec * akq;
    a(k, q) = s * akp + c * ec * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk - s * e * aqk;
    a(q, k) = s * apk + c * e * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = app - t * r;
  a(q, q) = aqq + t * r;

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = c * vkp - s * ec * vkq;
    v(k, q) = s * vkp + c * ec * vkq;
  }
}

}  // namespace

EigenSystem hermitian_eigensystem(const ComplexMatrix& m, const JacobiOptions& options) {
  const double defect = m.hermiticity_defect();
  const double allowed = options.hermiticity_tolerance * m.max_abs();
  if (defect > allowed) {
    throw ValidationError("hermitian", defect - allowed,
                          "matrix is not Hermitian (defect " + std::to_string(defect) + ")");
  }

  const std::size_t n = m.dim();
  ComplexMatrix a = 0.5 * (m + m.adjoint());
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double target = options.relative_off_tolerance * m.frobenius_norm();

  int sweep = 0;
  while (off_diagonal_mass(a) > target) {
    if (sweep++ >= options.max_sweeps) {
      throw ConvergenceError("hermitian_eigensystem: no convergence after " +
                             std::to_string(options.max_sweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  EigenSystem out{Spectrum{std::vector<double>(n)}, ComplexMatrix(n)};
  for (std::size_t c = 0; c < n; ++c) {
    out.spectrum.eigenvalues[c] = a(order[c], order[c]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, c) = v(r, order[c]);
  }
  return out;
}

Spectrum hermitian_eigenvalues(const ComplexMatrix& m, const JacobiOptions& options) {
  return hermitian_eigensystem(m, options).spectrum;
}

double trace_norm(const ComplexMatrix& m) {
  const Spectrum gram = hermitian_eigenvalues(m.adjoint() * m);
  double s = 0.0;
  for (double ev : gram.eigenvalues) s += std::sqrt(std::max(0.0, ev));
  return s;
}

double psd_threshold(const ComplexMatrix& m) { return -1e-10 * std::max(1.0, m.frobenius_norm()); }

std::vector<PrincipalMinor> all_principal_minors(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 0 || n > 4) throw DimensionError("all_principal_minors: supported for 1 <= dim <= 4");

  std::vector<std::vector<std::size_t>> subsets;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    subsets.push_back(std::move(idx));
  }
  std::stable_sort(subsets.begin(), subsets.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });

  std::vector<PrincipalMinor> out;
  out.reserve(subsets.size());
  for (auto& idx : subsets) {
    const Complex det = determinant(principal_submatrix(m, idx));
    if (std::abs(det.imag()) > 1e-10) {
      throw ValidationError("hermitian", std::abs(det.imag()) - 1e-10,
                            "principal minor has imaginary part " + std::to_string(det.imag()));
    }
    out.push_back({std::move(idx), det.real()});
  }
  return out;
}

ComplexMatrix RealMatrix::to_complex() const {
  if (rows_ != cols_) throw DimensionError("RealMatrix::to_complex: matrix is not square");
  ComplexMatrix out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
  return out;
}

}  // namespace qmaps
