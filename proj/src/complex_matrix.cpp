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

#include "qmaps/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qmaps/errors.hpp"

namespace qmaps {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a.dim()) +
                         " vs " + std::to_string(b.dim()) + ")");
  }
}

void require_bipartite(const ComplexMatrix& m, BipartiteDims dims, const char* what) {
  if (dims.a == 0 || dims.b == 0 || m.dim() != dims.total()) {
    throw DimensionError(std::string(what) + ": matrix of dim " + std::to_string(m.dim()) +
                         " does not split as " + std::to_string(dims.a) + "x" +
                         std::to_string(dims.b));
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) {
    throw DimensionError("ComplexMatrix: expected " + std::to_string(dim_ * dim_) +
                         " entries, got " + std::to_string(entries_.size()));
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()) {
  entries_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw DimensionError("ComplexMatrix: ragged or non-square literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<Complex> values) {
  return diagonal(std::span<const Complex>(values.begin(), values.size()));
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> ket) {
  ComplexMatrix m(ket.size());
  for (std::size_t i = 0; i < ket.size(); ++i)
    for (std::size_t j = 0; j < ket.size(); ++j) m(i, j) = ket[i] * std::conj(ket[j]);
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : entries_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : entries_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMatrix::hermiticity_defect() const {
  double d = 0.0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return d;
}

bool ComplexMatrix::is_hermitian(double relative_tol) const {
  return hermiticity_defect() <= relative_tol * max_abs();
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "operator+");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "operator-");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (auto& z : entries_) z *= scalar;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(ComplexMatrix a, Complex scalar) { return a *= scalar; }
ComplexMatrix operator*(Complex scalar, ComplexMatrix a) { return a *= scalar; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "operator*");
  const std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "max_abs_diff");
  double d = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k)
    d = std::max(d, std::abs(a.entries()[k] - b.entries()[k]));
  return d;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  ComplexMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, BipartiteDims dims, Subsystem subsystem) {
  require_bipartite(m, dims, "partial_transpose");
  ComplexMatrix out(m.dim());
  for (std::size_t i = 0; i < dims.a; ++i)
    for (std::size_t j = 0; j < dims.a; ++j)
      for (std::size_t k = 0; k < dims.b; ++k)
        for (std::size_t l = 0; l < dims.b; ++l) {
          const Complex v = m(i * dims.b + k, j * dims.b + l);
          if (subsystem == Subsystem::B) {
            out(i * dims.b + l, j * dims.b + k) = v;
          } else {
            out(j * dims.b + k, i * dims.b + l) = v;
          }
        }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, BipartiteDims dims, Subsystem keep) {
  require_bipartite(m, dims, "partial_trace");
  if (keep == Subsystem::A) {
    ComplexMatrix out(dims.a);
    for (std::size_t i = 0; i < dims.a; ++i)
      for (std::size_t j = 0; j < dims.a; ++j)
        for (std::size_t k = 0; k < dims.b; ++k) out(i, j) += m(i * dims.b + k, j * dims.b + k);
    return out;
  }
  ComplexMatrix out(dims.b);
  for (std::size_t k = 0; k < dims.b; ++k)
    for (std::size_t l = 0; l < dims.b; ++l)
      for (std::size_t i = 0; i < dims.a; ++i) out(k, l) += m(i * dims.b + k, i * dims.b + l);
  return out;
}

Complex hs_inner(const ComplexMatrix& x, const ComplexMatrix& y) {
  require_same_dim(x, y, "hs_inner");
  // Tr[x^dagger y] = sum_ij conj(x_ij) y_ij
  Complex s = 0.0;
  for (std::size_t k = 0; k < x.entries().size(); ++k) s += std::conj(x.entries()[k]) * y.entries()[k];
  return s;
}

ComplexMatrix principal_submatrix(const ComplexMatrix& m, std::span<const std::size_t> indices) {
  ComplexMatrix out(indices.size());
  for (std::size_t r = 0; r < indices.size(); ++r)
    for (std::size_t c = 0; c < indices.size(); ++c) {
      if (indices[r] >= m.dim() || indices[c] >= m.dim())
        throw DimensionError("principal_submatrix: index out of range");
      out(r, c) = m(indices[r], indices[c]);
    }
  return out;
}

Complex determinant(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  if (n > 4) throw DimensionError("determinant: cofactor expansion is limited to dim <= 4");
  if (n == 0) return 1.0;
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  Complex det = 0.0;
  for (std::size_t col = 0; col < n; ++col) {
    if (m(0, col) == Complex{}) continue;
    ComplexMatrix minor(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == col) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    const double sign = (col % 2 == 0) ? 1.0 : -1.0;
    det += sign * m(0, col) * determinant(minor);
  }
  return det;
}

}  // namespace qmaps
