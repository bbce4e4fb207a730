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

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qmaps {

using Complex = std::complex<double>;

/// Dense square matrix of complex doubles, stored row-major.
///
/// Used both for single-qutrit operators (dim 3) and for bipartite
/// operators on C^3 (x) C^3 (dim 9). All operations are value-semantic.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);
  /// Row-wise literal; every row must have as many entries as there are rows.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix zero(std::size_t dim) { return ComplexMatrix(dim); }
  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const Complex> values);
  static ComplexMatrix diagonal(std::initializer_list<Complex> values);
  /// |v><v|
  static ComplexMatrix outer(std::span<const Complex> ket);

  std::size_t dim() const noexcept { return dim_; }
  std::span<const Complex> entries() const noexcept { return entries_; }
  std::span<Complex> entries() noexcept { return entries_; }

  Complex& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  Complex trace() const;
  double max_abs() const;
  double frobenius_norm() const;

  /// max_ij |m_ij - conj(m_ji)|
  double hermiticity_defect() const;
  /// Defect within `relative_tol * max_ij |m_ij|`.
  bool is_hermitian(double relative_tol = 1e-12) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(ComplexMatrix a, Complex scalar);
ComplexMatrix operator*(Complex scalar, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest entrywise modulus of a - b.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

enum class Subsystem { A, B };

/// Local dimensions of a bipartite operator; the row index is i*dB + k.
struct BipartiteDims {
  std::size_t a = 3;
  std::size_t b = 3;
  std::size_t total() const noexcept { return a * b; }
  friend bool operator==(const BipartiteDims&, const BipartiteDims&) = default;
};

inline constexpr BipartiteDims kQutritPair{3, 3};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Transposes the chosen tensor factor. Exact involution.
ComplexMatrix partial_transpose(const ComplexMatrix& m, BipartiteDims dims,
                                Subsystem subsystem = Subsystem::B);

/// Traces out the factor that is not kept.
ComplexMatrix partial_trace(const ComplexMatrix& m, BipartiteDims dims, Subsystem keep);

/// Hilbert-Schmidt inner product Tr[x^dagger y].
Complex hs_inner(const ComplexMatrix& x, const ComplexMatrix& y);

/// Rows/columns restricted to `indices` (in the given order).
ComplexMatrix principal_submatrix(const ComplexMatrix& m, std::span<const std::size_t> indices);

/// Cofactor-expansion determinant; intended for dim <= 4.
Complex determinant(const ComplexMatrix& m);

}  // namespace qmaps
