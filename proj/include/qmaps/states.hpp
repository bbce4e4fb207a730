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

#include <optional>
#include <string_view>
#include <utility>

#include "qmaps/complex_matrix.hpp"

namespace qmaps {

enum class StateFamily { TauX, SpaChoi, MaxEntangled };

std::string_view to_string(StateFamily family);
StateFamily state_family_from_string(std::string_view name);

/// Where a state came from: a family and its parameter (x for TauX, alpha
/// for SpaChoi, local dimension d for MaxEntangled).
struct StateFamilyPoint {
  StateFamily family;
  double parameter;
  friend bool operator==(const StateFamilyPoint&, const StateFamilyPoint&) = default;
};

/// Throws DomainError if the parameter is outside the family's domain.
void validate(const StateFamilyPoint& point);

/// Hermitian, PSD, unit-trace matrix with a declared bipartition.
/// Construction validates all three invariants and throws ValidationError
/// naming the first one that fails.
class DensityMatrix {
 public:
  static constexpr double kHermiticityTolerance = 1e-12;
  static constexpr double kTraceTolerance = 1e-12;
  static constexpr double kPsdTolerance = 1e-10;

  DensityMatrix(ComplexMatrix matrix, BipartiteDims dims,
                std::optional<StateFamilyPoint> provenance = std::nullopt);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  BipartiteDims dims() const noexcept { return dims_; }
  const std::optional<StateFamilyPoint>& provenance() const noexcept { return provenance_; }
  double purity() const;

 private:
  ComplexMatrix matrix_;
  BipartiteDims dims_;
  std::optional<StateFamilyPoint> provenance_;
};

DensityMatrix max_entangled(std::size_t d);

/// Two-qutrit PPT family with prefactor 1 / (3 (1 + x + 1/x)); x > 0.
DensityMatrix tau_x(double x);

/// Choi matrix of the optimal SPA of Lambda_alpha, built from its closed-form
/// entries and cross-checked against choi_of(spa(alpha)); a disagreement
/// above 1e-12 throws std::logic_error.
DensityMatrix spa_choi_state(double alpha);
/// Closed-form entries only, no cross-check and no validation.
ComplexMatrix spa_choi_closed_form(double alpha);

/// Both single-site marginals (A, then B) of a bipartite state.
std::pair<DensityMatrix, DensityMatrix> reduced_pair(const DensityMatrix& rho);

}  // namespace qmaps
