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

#include <catch_amalgamated.hpp>

#include "qmaps/choi.hpp"
#include "qmaps/errors.hpp"
#include "qmaps/spectral.hpp"
#include "support.hpp"

using namespace qmaps;
using namespace qmaps::testing;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

// Entries of the Choi matrix of Lambda_alpha, written out by hand.
ComplexMatrix lambda_choi_reference(double a) {
  const double den = 3.0 + 3.0 * a * a;
  ComplexMatrix m = ComplexMatrix::diagonal({a * a, 0.0, 1.0, a * a, 1.0, 0.0, 0.0, 1.0, a * a});
  m(0, 4) = m(4, 0) = m(5, 7) = m(7, 5) = -a;
  m(0, 8) = m(8, 0) = -a * a;
  return m * (1.0 / den);
}

ComplexMatrix spa_choi_reference(double a) {
  const double s = std::sqrt(4.0 * a * a + 1.0);
  const double den = 6.0 * a * a + 9.0 * s - 3.0;
  const double corner = (2.0 * a * a + s - 1.0) / den;
  const double low = (s - 1.0) / den;
  const double high = (s + 1.0) / den;
  ComplexMatrix m = ComplexMatrix::diagonal({corner, low, high, corner, high, low, low, high, corner});
  m(0, 4) = m(4, 0) = m(5, 7) = m(7, 5) = -2.0 * a / den;
  m(0, 8) = m(8, 0) = -2.0 * a * a / den;
  return m;
}

}  // namespace

TEST_CASE("maximally entangled projector") {
  const ComplexMatrix p = max_entangled_projector(3);
  CHECK_THAT(p.trace().real(), WithinAbs(1.0, 1e-15));
  CHECK(max_abs_diff(p * p, p) < 1e-15);
  CHECK_THAT(p(0, 4).real(), WithinAbs(1.0 / 3.0, 1e-15));
  CHECK_THROWS_AS(max_entangled_projector(1), DomainError);
}

TEST_CASE("Choi matrices of simple maps") {
  CHECK(max_abs_diff(choi_of(QutritMapSpec::identity()).matrix, max_entangled_projector(3)) < 1e-15);
  const Spectrum id = hermitian_eigenvalues(choi_of(QutritMapSpec::identity()).matrix);
  CHECK(id.count_below(1e-12) == 8);
  CHECK(max_abs_diff(choi_of(QutritMapSpec::depolarizing()).matrix, ComplexMatrix::identity(9) * (1.0 / 9.0)) <
        1e-15);
  CHECK(choi_of(QutritMapSpec::choi_map()).source == QutritMapSpec::choi_map());
}

TEST_CASE("Choi matrix of Lambda_alpha matches the hand-written entries") {
  for (double alpha : linspace(0.02, 1.0, 50)) {
    const ChoiMatrix c = choi_of(QutritMapSpec::lambda_alpha(alpha));
    CHECK(max_abs_diff(c.matrix, lambda_choi_reference(alpha)) < 1e-14);
    CHECK(c.matrix.is_hermitian());
    CHECK_THAT(c.matrix.trace().real(), WithinAbs(1.0, 1e-12));
  }
  CHECK_THAT(choi_of(QutritMapSpec::lambda_alpha(1.0)).matrix(0, 4).real(), WithinAbs(-1.0 / 6.0, 1e-15));
}

TEST_CASE("least Choi eigenvalue") {
  for (double alpha : linspace(0.02, 1.0, 50)) {
    const double numeric = hermitian_eigenvalues(choi_of(QutritMapSpec::lambda_alpha(alpha)).matrix).min();
    CHECK_THAT(least_choi_eigenvalue(alpha), WithinAbs(numeric, 1e-10));
    CHECK(least_choi_eigenvalue(alpha) < 0.0);
  }
  CHECK_THAT(least_choi_eigenvalue(1.0), WithinAbs((1.0 - std::sqrt(5.0)) / 12.0, 1e-15));
  CHECK_THAT(least_choi_eigenvalue(1.0), WithinAbs(-0.103006, 1e-6));
  CHECK_THAT(least_choi_eigenvalue(0.5), WithinAbs((1.0 - std::sqrt(2.0)) / 7.5, 1e-15));
  CHECK_THAT(least_choi_eigenvalue(0.5), WithinAbs(-0.055229, 1e-6));
  CHECK(std::abs(least_choi_eigenvalue(1e-6)) < 1e-11);
}

TEST_CASE("SPA parameters") {
  const SpaParameters one = spa_parameters(1.0);
  CHECK_THAT(one.lambda, WithinAbs((std::sqrt(5.0) - 1.0) / 12.0, 1e-15));
  const double nine_lambda = 9.0 * one.lambda;
  CHECK_THAT(one.p_star, WithinAbs(nine_lambda / (nine_lambda + 1.0), 1e-15));
  CHECK_THAT(one.p_star, WithinAbs(0.48107, 5e-6));
  CHECK(one.d == 3);
  CHECK(one.d_prime == 3);
  CHECK(one.beta == 1.0);
  CHECK_THAT(spa_parameters(0.25).lambda, WithinRel((std::sqrt(1.25) - 1.0) / 6.375, 1e-14));
  CHECK(spa_weight(0.0) == 0.0);
  double prev = -1.0;
  for (double lambda : linspace(0.0, 1.0, 30)) {
    const double p = spa_weight(lambda);
    CHECK(p > prev);
    CHECK(p < 1.0);
    prev = p;
  }
  CHECK_THAT(spa_weight(0.1, 2, 2, 0.5), WithinAbs(0.8 / 1.8, 1e-15));
}

TEST_CASE("complete positivity verdicts") {
  for (double alpha : linspace(0.02, 1.0, 50)) {
    const CompletePositivity lam = is_completely_positive(QutritMapSpec::lambda_alpha(alpha));
    CHECK_FALSE(lam.completely_positive);
    CHECK_THAT(lam.min_eigenvalue, WithinAbs(least_choi_eigenvalue(alpha), 1e-10));
    CHECK(is_completely_positive(QutritMapSpec::spa(alpha)).completely_positive);
  }
  CHECK(is_completely_positive(QutritMapSpec::depolarizing()).completely_positive);
  CHECK(is_completely_positive(QutritMapSpec::identity()).completely_positive);
  CHECK_FALSE(is_completely_positive(QutritMapSpec::transposition()).completely_positive);
  CHECK_FALSE(is_completely_positive(QutritMapSpec::choi_map()).completely_positive);
}

TEST_CASE("SPA Choi matrix: closed form, mixture and trace") {
  for (double alpha : linspace(0.02, 1.0, 50)) {
    const ComplexMatrix spa = choi_of(QutritMapSpec::spa(alpha)).matrix;
    const double p = spa_parameters(alpha).p_star;
    const ComplexMatrix mixture =
        ComplexMatrix::identity(9) * (p / 9.0) + choi_of(QutritMapSpec::lambda_alpha(alpha)).matrix * (1.0 - p);
    CHECK(max_abs_diff(spa, spa_choi_reference(alpha)) < 1e-12);
    CHECK(max_abs_diff(spa, mixture) < 1e-12);
    CHECK_THAT(spa.trace().real(), WithinAbs(1.0, 1e-12));
    CHECK(std::abs(hermitian_eigenvalues(spa).min()) < 1e-12);
  }
}

TEST_CASE("trace of Choi matrices of trace-preserving maps") {
  for (double alpha : {0.3, 1.0}) {
    for (const QutritMapSpec& map :
         {QutritMapSpec::lambda_alpha(alpha), QutritMapSpec::spa(alpha), QutritMapSpec::miller_olkiewicz(),
          QutritMapSpec::depolarizing(), QutritMapSpec::transposition(), QutritMapSpec::identity()}) {
      CHECK_THAT(choi_of(map).matrix.trace().real(), WithinAbs(1.0, 1e-12));
    }
  }
  CHECK_THAT(choi_of(QutritMapSpec::lambda_alpha_dual(1.0)).matrix.trace().real(), WithinAbs(1.0, 1e-12));
}
