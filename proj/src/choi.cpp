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

#include "qmaps/choi.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qmaps/errors.hpp"
#include "qmaps/spectral.hpp"

namespace qmaps {

ComplexMatrix max_entangled_projector(std::size_t d) {
  if (d < 2) throw DomainError("max_entangled_projector: d must be >= 2");
  std::vector<Complex> ket(d * d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t i = 0; i < d; ++i) ket[i * d + i] = amp;
  return ComplexMatrix::outer(ket);
}

ChoiMatrix choi_of(const QutritMapSpec& map) {
  return {extend_one_sided(map, max_entangled_projector(3)), map};
}

double least_choi_eigenvalue(double alpha) {
  require_alpha(alpha);
  const double a2 = alpha * alpha;
  return (1.0 - std::sqrt(1.0 + 4.0 * a2)) / (6.0 + 6.0 * a2);
}

double spa_weight(double lambda, int d, int d_prime, double beta) {
  const double scaled = lambda * d * d_prime / beta;
  return scaled / (scaled + 1.0);
}

SpaParameters spa_parameters(double alpha) {
  require_alpha(alpha);
  // beta = 1 only holds for a trace-preserving map, whose Choi matrix has
  // A-marginal I/3.
  const ComplexMatrix reduced =
      partial_trace(choi_of(QutritMapSpec::lambda_alpha(alpha)).matrix, kQutritPair, Subsystem::A);
  const double tp_gap = max_abs_diff(reduced, ComplexMatrix::identity(3) * (1.0 / 3.0));
  if (tp_gap > 1e-12) {
    throw std::logic_error("spa_parameters: Lambda_alpha is not trace preserving (gap " +
                           std::to_string(tp_gap) + ")");
  }

  SpaParameters p;
  p.alpha = alpha;
  p.lambda = std::max(0.0, -least_choi_eigenvalue(alpha));
  p.p_star = spa_weight(p.lambda, p.d, p.d_prime, p.beta);
  return p;
}

CompletePositivity is_completely_positive(const QutritMapSpec& map) {
  const double min_eig = hermitian_eigenvalues(choi_of(map).matrix).min();
  return {min_eig >= -1e-10, min_eig};
}

}  // namespace qmaps
