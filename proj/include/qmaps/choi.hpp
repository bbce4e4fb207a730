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

#include "qmaps/complex_matrix.hpp"
#include "qmaps/maps.hpp"

namespace qmaps {

/// Choi matrix (I (x) map)(|Phi+><Phi+|) together with the map it came from.
struct ChoiMatrix {
  ComplexMatrix matrix;
  QutritMapSpec source;
};

/// |Phi+><Phi+| with |Phi+> = sum_i |ii> / sqrt(d).
ComplexMatrix max_entangled_projector(std::size_t d);

ChoiMatrix choi_of(const QutritMapSpec& map);

/// Closed-form least eigenvalue of the Choi matrix of Lambda_alpha:
/// (1 - sqrt(1 + 4 a^2)) / (6 + 6 a^2).
double least_choi_eigenvalue(double alpha);

/// Mixing weights of the optimal structural physical approximation of
/// Lambda_alpha. The rescaling factor beta is 1 because Lambda_alpha is
/// trace preserving.
struct SpaParameters {
  double alpha = 0.0;
  double lambda = 0.0;  ///< max(0, -least Choi eigenvalue)
  double p_star = 0.0;  ///< weight on the depolarizing map
  int d = 3;
  int d_prime = 3;
  double beta = 1.0;
};

SpaParameters spa_parameters(double alpha);

/// p* = lambda d d' / beta / (lambda d d' / beta + 1).
double spa_weight(double lambda, int d = 3, int d_prime = 3, double beta = 1.0);

struct CompletePositivity {
  bool completely_positive = false;
  double min_eigenvalue = 0.0;
};

/// CP iff the Choi matrix has min eigenvalue >= -1e-10.
CompletePositivity is_completely_positive(const QutritMapSpec& map);

}  // namespace qmaps
