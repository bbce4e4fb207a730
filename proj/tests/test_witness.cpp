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

#include <cmath>

#include "qmaps/choi.hpp"
#include "qmaps/errors.hpp"
#include "qmaps/witness.hpp"
#include "support.hpp"

using namespace qmaps;
using namespace qmaps::testing;
using Catch::Matchers::WithinAbs;

namespace {

WitnessOperator lambda_one_witness() { return WitnessOperator::from_map(QutritMapSpec::lambda_alpha(1.0)); }

Qutrit to_qutrit(const std::vector<Complex>& v) { return {v[0], v[1], v[2]}; }

}  // namespace

TEST_CASE("witness construction") {
  const WitnessOperator w = lambda_one_witness();
  CHECK(w.label() == "Choi[LambdaAlpha(1)]");
  CHECK(w.matrix() == choi_of(QutritMapSpec::lambda_alpha(1.0)).matrix);
  std::mt19937_64 rng(41);
  CHECK_THROWS_AS(WitnessOperator(random_matrix(rng, 9), "bad"), ValidationError);
  CHECK_THROWS_AS(WitnessOperator(ComplexMatrix::identity(3), "small"), ValidationError);
}

TEST_CASE("witness value on tau_x follows the rational closed form") {
  const WitnessOperator w = lambda_one_witness();
  for (double x : linspace(0.1, 5.0, 50)) {
    const double value = witness_value(w, tau_x(x));
    CHECK_THAT(value, WithinAbs((3.0 - x) / (18.0 * (x * x + x + 1.0)), 1e-12));
    if (x < 3.0) CHECK(value > 0.0);
    if (x > 3.0) CHECK(value < 0.0);
  }
  CHECK(witness_value(w, tau_x(4.0)) < 0.0);
  CHECK(witness_value(w, max_entangled(3)) < 0.0);
}

TEST_CASE("product expectation and block positivity") {
  const WitnessOperator w = lambda_one_witness();
  const double s = 1.0 / std::sqrt(3.0);
  const Qutrit flat{Complex(s), Complex(s), Complex(s)};
  CHECK(std::abs(product_expectation(w.matrix(), flat, flat)) < 1e-12);

  std::mt19937_64 rng(42);
  for (int k = 0; k < 50; ++k) {
    const std::vector<Complex> g = random_unit(rng, 3);
    const std::vector<Complex> d = random_unit(rng, 3);
    std::vector<Complex> gd(9);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) gd[3 * i + j] = g[i] * d[j];
    const double ref = hs_inner(ComplexMatrix::outer(gd), w.matrix()).real();
    CHECK_THAT(product_expectation(w.matrix(), to_qutrit(g), to_qutrit(d)), WithinAbs(ref, 1e-14));
  }

  for (double alpha : {0.25, 0.5, 1.0}) {
    const WitnessOperator wa = WitnessOperator::from_map(QutritMapSpec::lambda_alpha(alpha));
    CHECK(block_positivity_spot_check(wa.matrix(), 5000, 7) >= -1e-12);
  }
  CHECK(block_positivity_spot_check(w.matrix(), 100, 3) == block_positivity_spot_check(w.matrix(), 100, 3));
  CHECK(block_positivity_spot_check(ComplexMatrix::identity(9) * -1.0, 10, 1) < 0.0);
}

TEST_CASE("weak optimality search finds a product zero") {
  const WeakOptimality r = weak_optimality_check(lambda_one_witness());
  CHECK(r.found);
  CHECK(std::abs(r.value) <= 1e-9);
  double ng = 0.0;
  double nd = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    ng += std::norm(r.gamma[i]);
    nd += std::norm(r.delta[i]);
  }
  CHECK_THAT(ng, WithinAbs(1.0, 1e-12));
  CHECK_THAT(nd, WithinAbs(1.0, 1e-12));
  CHECK_THAT(product_expectation(lambda_one_witness().matrix(), r.gamma, r.delta), WithinAbs(r.value, 1e-12));

  CHECK_THROWS_AS(weak_optimality_check(WitnessOperator(ComplexMatrix::identity(9) * -1.0, "negative")),
                  std::invalid_argument);
  const WeakOptimality strict = weak_optimality_check(WitnessOperator(ComplexMatrix::identity(9), "identity"));
  CHECK_FALSE(strict.found);
  CHECK_THAT(strict.value, WithinAbs(1.0, 1e-12));
}

TEST_CASE("Gell-Mann basis is orthogonal") {
  const GellMannBasis& b = gellmann_basis();
  CHECK(b.matrices[0] == ComplexMatrix::identity(3));
  CHECK(b.norms[0] == 3.0);
  for (std::size_t i = 0; i < 9; ++i) {
    CHECK(b.matrices[i].is_hermitian());
    if (i > 0) {
      CHECK(std::abs(b.matrices[i].trace()) < 1e-15);
      CHECK_THAT(b.norms[i], WithinAbs(2.0, 1e-15));
    }
    for (std::size_t j = 0; j < 9; ++j) {
      const Complex ip = hs_inner(b.matrices[i], b.matrices[j]);
      CHECK(std::abs(ip - (i == j ? b.norms[i] : 0.0)) < 1e-14);
    }
  }
  CHECK(b.matrices[5](0, 2) == Complex(0.0, -1.0));
  CHECK(b.matrices[5](2, 0) == Complex(0.0, 1.0));
}

TEST_CASE("Gell-Mann decomposition of the alpha = 1 witness") {
  const WitnessOperator w = lambda_one_witness();
  const RealMatrix c = decompose_in_gellmann(w);
  CHECK(max_abs_diff(reconstruct_from_gellmann(c), w.matrix()) < 1e-12);

  RealMatrix expected(9, 9);
  const double r3 = std::sqrt(3.0);
  expected(0, 0) = 1.0 / 9.0;
  for (std::size_t k : {1u, 4u, 6u, 7u}) expected(k, k) = -1.0 / 12.0;
  for (std::size_t k : {2u, 5u}) expected(k, k) = 1.0 / 12.0;
  expected(3, 3) = expected(8, 8) = 1.0 / 24.0;
  expected(3, 8) = -1.0 / (8.0 * r3);
  expected(8, 3) = 1.0 / (8.0 * r3);
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j) CHECK_THAT(c(i, j), WithinAbs(expected(i, j), 1e-14));
}

TEST_CASE("Gell-Mann decomposition round-trips random Hermitian operators") {
  std::mt19937_64 rng(43);
  for (int k = 0; k < 20; ++k) {
    const ComplexMatrix h = random_hermitian(rng, 9);
    CHECK(max_abs_diff(reconstruct_from_gellmann(decompose_in_gellmann(h)), h) < 1e-12);
  }
  CHECK_THROWS_AS(decompose_in_gellmann(ComplexMatrix::identity(4)), DimensionError);
  CHECK_THROWS_AS(reconstruct_from_gellmann(RealMatrix(3, 3)), DimensionError);
}
