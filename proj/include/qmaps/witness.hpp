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

#include <array>
#include <cstdint>
#include <string>

#include "qmaps/complex_matrix.hpp"
#include "qmaps/maps.hpp"
#include "qmaps/spectral.hpp"
#include "qmaps/states.hpp"

namespace qmaps {

using Qutrit = std::array<Complex, 3>;

/// Hermitian 9x9 operator meant to be non-negative on product states.
class WitnessOperator {
 public:
  /// Throws ValidationError if `matrix` is not a Hermitian 9x9 operator.
  WitnessOperator(ComplexMatrix matrix, std::string label);

  /// The Choi matrix of `map`, labelled after it.
  static WitnessOperator from_map(const QutritMapSpec& map);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  const std::string& label() const noexcept { return label_; }

 private:
  ComplexMatrix matrix_;
  std::string label_;
};

/// Re Tr[W rho]; throws if the imaginary part exceeds 1e-12.
double witness_value(const WitnessOperator& w, const DensityMatrix& rho);

/// <gamma (x) delta| W |gamma (x) delta>, real part.
double product_expectation(const ComplexMatrix& w, const Qutrit& gamma, const Qutrit& delta);

/// Minimum of the product expectation over `samples` Haar-random unit product
/// vectors drawn from a fixed seed.
double block_positivity_spot_check(const ComplexMatrix& w, std::size_t samples, std::uint64_t seed);

struct WeakOptimality {
  bool found = false;
  Qutrit gamma{};
  Qutrit delta{};
  double value = 0.0;
};

/// Minimizes the product expectation of W over unit product vectors.
///
/// gamma is parameterized as (cos t1, sin t1 cos t2 e^{i p1}, sin t1 sin t2 e^{i p2})
/// and scanned on a 12-point grid per angle; for each gamma the optimal delta
/// is the bottom eigenvector of (gamma^dagger (x) I) W (gamma (x) I), so the
/// inner minimization is exact. The best grid points are then polished by
/// coordinate descent with step halving down to 1e-10. `found` is true when
/// the minimum is <= 1e-9.
///
/// Throws std::invalid_argument if a 10^4-sample spot check finds W negative
/// on some product vector (W is then not block positive).
WeakOptimality weak_optimality_check(const WitnessOperator& w);

/// G1 = I followed by the eight Gell-Mann matrices, in the order
/// l1, l2, l3, l4, l5, l6, l7, l8.
struct GellMannBasis {
  std::array<ComplexMatrix, 9> matrices;
  std::array<double, 9> norms{};  ///< Tr(G_i^2)
};

const GellMannBasis& gellmann_basis();

/// c_ij = <G_i (x) G_j, W> / (Tr G_i^2 Tr G_j^2); 9x9, real for Hermitian W.
RealMatrix decompose_in_gellmann(const WitnessOperator& w);
RealMatrix decompose_in_gellmann(const ComplexMatrix& w);
/// sum_ij c_ij G_i (x) G_j
ComplexMatrix reconstruct_from_gellmann(const RealMatrix& coefficients);

}  // namespace qmaps
