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
#include "qmaps/detection.hpp"
#include "qmaps/errors.hpp"
#include "qmaps/states.hpp"
#include "qmaps/witness.hpp"
#include "support.hpp"

using namespace qmaps;
using namespace qmaps::testing;
using Catch::Matchers::WithinAbs;

namespace {

std::string violated_invariant(const ComplexMatrix& m, BipartiteDims dims = kQutritPair) {
  try {
    DensityMatrix rho(m, dims);
  } catch (const ValidationError& e) {
    return e.invariant();
  }
  return "";
}

}  // namespace

TEST_CASE("density matrix validation names the violated invariant") {
  CHECK(violated_invariant(ComplexMatrix::identity(9) * (1.0 / 9.0)).empty());
  CHECK(violated_invariant(ComplexMatrix::identity(8) * (1.0 / 8.0)) == "dimension");

  ComplexMatrix skew = ComplexMatrix::identity(9) * (1.0 / 9.0);
  skew(0, 1) = 0.01;
  CHECK(violated_invariant(skew) == "hermitian");
  CHECK(violated_invariant(ComplexMatrix::identity(9) * 0.2) == "unit-trace");

  ComplexMatrix neg = ComplexMatrix::zero(9);
  neg(0, 0) = 0.5;
  neg(1, 1) = 0.6;
  neg(2, 2) = -0.1;
  CHECK(violated_invariant(neg) == "positive-semidefinite");

  try {
    DensityMatrix rho(ComplexMatrix::identity(9) * 0.2, kQutritPair);
  } catch (const ValidationError& e) {
    CHECK_THAT(e.margin(), WithinAbs(0.8, 1e-12));
  }
}

TEST_CASE("random density matrices pass validation; pure states have unit purity") {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 20; ++k) {
    const DensityMatrix rho(random_density(rng, 9), kQutritPair);
    CHECK(rho.purity() <= 1.0 + 1e-12);
    CHECK(rho.purity() >= 1.0 / 9.0 - 1e-12);
  }
  const DensityMatrix pure(ComplexMatrix::outer(random_unit(rng, 6)), {2, 3});
  CHECK_THAT(pure.purity(), WithinAbs(1.0, 1e-12));
}

TEST_CASE("family parameters are validated") {
  CHECK_THROWS_AS(tau_x(0.0), DomainError);
  CHECK_THROWS_AS(tau_x(-1.0), DomainError);
  CHECK_THROWS_AS(tau_x(std::nan("")), DomainError);
  CHECK_THROWS_AS(spa_choi_state(0.0), DomainError);
  CHECK_THROWS_AS(spa_choi_state(1.01), DomainError);
  CHECK_THROWS_AS(max_entangled(1), DomainError);
  CHECK_THROWS_AS(validate({StateFamily::MaxEntangled, 2.5}), DomainError);
  CHECK_NOTHROW(validate({StateFamily::MaxEntangled, 4.0}));
  for (StateFamily f : {StateFamily::TauX, StateFamily::SpaChoi, StateFamily::MaxEntangled}) {
    CHECK(state_family_from_string(to_string(f)) == f);
  }
  CHECK_THROWS_AS(state_family_from_string("werner"), std::invalid_argument);
}

TEST_CASE("maximally entangled state") {
  const DensityMatrix phi = max_entangled(3);
  CHECK_THAT(phi.matrix()(0, 0).real(), WithinAbs(1.0 / 3.0, 1e-15));
  CHECK_THAT(phi.matrix()(0, 4).real(), WithinAbs(1.0 / 3.0, 1e-15));
  CHECK_THAT(phi.matrix()(0, 8).real(), WithinAbs(1.0 / 3.0, 1e-15));
  CHECK_THAT(phi.purity(), WithinAbs(1.0, 1e-12));
  const auto [a, b] = reduced_pair(phi);
  CHECK(max_abs_diff(a.matrix(), ComplexMatrix::identity(3) * (1.0 / 3.0)) < 1e-15);
  CHECK(max_abs_diff(b.matrix(), ComplexMatrix::identity(3) * (1.0 / 3.0)) < 1e-15);

  const DensityMatrix bell = max_entangled(2);
  const ComplexMatrix expected{{0.5, 0, 0, 0.5}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0.5, 0, 0, 0.5}};
  CHECK(bell.dims() == BipartiteDims{2, 2});
  CHECK(max_abs_diff(bell.matrix(), expected) < 1e-15);
  REQUIRE(phi.provenance());
  CHECK(*phi.provenance() == StateFamilyPoint{StateFamily::MaxEntangled, 3.0});
}

TEST_CASE("tau_x entries") {
  const ComplexMatrix t1 = tau_x(1.0).matrix();
  for (std::size_t r = 0; r < 9; ++r) CHECK_THAT(t1(r, r).real(), WithinAbs(1.0 / 9.0, 1e-15));
  for (std::size_t r : {0u, 4u, 8u})
    for (std::size_t c : {0u, 4u, 8u}) CHECK_THAT(t1(r, c).real(), WithinAbs(1.0 / 9.0, 1e-15));
  CHECK(t1(0, 1) == Complex(0.0));

  const double x = 2.5;
  const double pre = 1.0 / (3.0 * (1.0 + x + 1.0 / x));
  const std::array<double, 9> diag{1, x, 1 / x, 1 / x, 1, x, x, 1 / x, 1};
  const ComplexMatrix t = tau_x(x).matrix();
  for (std::size_t r = 0; r < 9; ++r) CHECK_THAT(t(r, r).real(), WithinAbs(pre * diag[r], 1e-15));
  CHECK_THAT(t(4, 8).real(), WithinAbs(pre, 1e-15));
  CHECK_THAT(t(3, 5).real(), WithinAbs(0.0, 1e-15));
}

TEST_CASE("tau_x is PPT on a log grid") {
  for (int k = 0; k < 100; ++k) {
    const double x = std::pow(10.0, -2.0 + 4.0 * k / 99.0);
    const DensityMatrix t = tau_x(x);
    CHECK_THAT(t.matrix().trace().real(), WithinAbs(1.0, 1e-12));
    CHECK(ppt_spectrum(t).min() >= -1e-10);
  }
  const WitnessOperator w = WitnessOperator::from_map(QutritMapSpec::lambda_alpha(1.0));
  CHECK(std::abs(witness_value(w, tau_x(3.0))) < 1e-15);
}

TEST_CASE("SPA Choi state") {
  const double s5 = std::sqrt(5.0);
  CHECK_THAT(spa_choi_state(1.0).matrix()(0, 0).real(), WithinAbs((1.0 + s5) / (3.0 + 9.0 * s5), 1e-15));
  CHECK_THAT(spa_choi_state(1.0).matrix()(0, 0).real(), WithinAbs(0.139940, 1e-6));
  for (double alpha : linspace(0.02, 1.0, 50)) {
    const DensityMatrix rho = spa_choi_state(alpha);
    CHECK_THAT(rho.matrix().trace().real(), WithinAbs(1.0, 1e-12));
    CHECK(max_abs_diff(rho.matrix(), choi_of(QutritMapSpec::spa(alpha)).matrix) < 1e-12);
    CHECK(max_abs_diff(rho.matrix(), spa_choi_closed_form(alpha)) == 0.0);
  }
  CHECK(hermitian_eigenvalues(spa_choi_state(0.5).matrix()).min() >= -1e-10);
}

TEST_CASE("partial transpose of the SPA Choi state") {
  for (double alpha : linspace(0.02, 0.99, 50)) {
    CHECK(ppt_spectrum(spa_choi_state(alpha)).count_below(-1e-10) == 1);
  }
  CHECK(ppt_spectrum(spa_choi_state(1.0)).min() >= -1e-10);
}

TEST_CASE("marginals") {
  std::mt19937_64 rng(32);
  const ComplexMatrix ra = random_density(rng, 3);
  const ComplexMatrix rb = random_density(rng, 3);
  const auto [a, b] = reduced_pair(DensityMatrix(kron(ra, rb), kQutritPair));
  CHECK(max_abs_diff(a.matrix(), ra) < 1e-14);
  CHECK(max_abs_diff(b.matrix(), rb) < 1e-14);

  for (double alpha : linspace(0.02, 1.0, 10)) {
    const auto [sa, sb] = reduced_pair(spa_choi_state(alpha));
    for (const DensityMatrix* m : {&sa, &sb}) {
      CHECK(m->purity() >= 1.0 / 3.0 - 1e-12);
      CHECK(m->purity() <= 1.0 + 1e-12);
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
          if (r != c) CHECK(std::abs(m->matrix()(r, c)) < 1e-15);
    }
  }
}
