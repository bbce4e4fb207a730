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

#include <cstddef>
#include <vector>

#include "qmaps/complex_matrix.hpp"

namespace qmaps {

/// Real eigenvalues of a Hermitian matrix, sorted ascending.
struct Spectrum {
  std::vector<double> eigenvalues;

  std::size_t dimension() const noexcept { return eigenvalues.size(); }
  double min() const { return eigenvalues.front(); }
  double max() const { return eigenvalues.back(); }
  double sum() const;
  /// Number of eigenvalues strictly below `threshold`.
  std::size_t count_below(double threshold) const;
};

/// Eigenvalues (ascending) plus the unitary whose columns are the matching
/// eigenvectors, so that m = V diag(values) V^dagger.
struct EigenSystem {
  Spectrum spectrum;
  ComplexMatrix vectors;
};

struct JacobiOptions {
  double relative_off_tolerance = 1e-14;
  int max_sweeps = 100;
  double hermiticity_tolerance = 1e-12;
};

/// Cyclic complex Jacobi diagonalization.
///
/// Sweeps every (p, q) pair with a unitary plane rotation until the
/// off-diagonal Frobenius mass is below `relative_off_tolerance * ||m||_F`.
/// Throws ValidationError for non-Hermitian input and ConvergenceError if
/// the sweep budget runs out.
EigenSystem hermitian_eigensystem(const ComplexMatrix& m, const JacobiOptions& options = {});
Spectrum hermitian_eigenvalues(const ComplexMatrix& m, const JacobiOptions& options = {});

/// Sum of singular values, from the eigenvalues of m^dagger m.
double trace_norm(const ComplexMatrix& m);

/// PSD threshold shared across the library: min eigenvalue >= -1e-10 * max(1, ||m||).
double psd_threshold(const ComplexMatrix& m);

struct PrincipalMinor {
  std::vector<std::size_t> indices;
  double value = 0.0;
};

/// Every principal minor of a Hermitian matrix of dim <= 4, ordered by
/// subset size and then lexicographically.
std::vector<PrincipalMinor> all_principal_minors(const ComplexMatrix& m);

/// Row-major dense real matrix, used for coefficient tables and covariance
/// matrices.
class RealMatrix {
 public:
  RealMatrix() = default;
  RealMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), values_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double& operator()(std::size_t r, std::size_t c) { return values_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return values_[r * cols_ + c]; }
  const std::vector<double>& values() const noexcept { return values_; }

  /// Embeds a square real matrix in a ComplexMatrix.
  ComplexMatrix to_complex() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> values_;
};

}  // namespace qmaps
