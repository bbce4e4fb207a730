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

#include <cmath>
#include <random>
#include <vector>

#include "qmaps/complex_matrix.hpp"

namespace qmaps::testing {

inline std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> out(n);
  for (int k = 0; k < n; ++k) out[k] = a + (b - a) * k / (n - 1);
  out.back() = b;
  return out;
}

inline ComplexMatrix random_matrix(std::mt19937_64& rng, std::size_t d) {
  std::normal_distribution<double> g;
  ComplexMatrix m(d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) m(r, c) = {g(rng), g(rng)};
  return m;
}

inline ComplexMatrix random_hermitian(std::mt19937_64& rng, std::size_t d) {
  const ComplexMatrix g = random_matrix(rng, d);
  return (g + g.adjoint()) * 0.5;
}

inline std::vector<Complex> random_unit(std::mt19937_64& rng, std::size_t d) {
  std::normal_distribution<double> g;
  std::vector<Complex> v(d);
  double n2 = 0.0;
  for (Complex& z : v) {
    z = {g(rng), g(rng)};
    n2 += std::norm(z);
  }
  for (Complex& z : v) z /= std::sqrt(n2);
  return v;
}

/// Random density matrix g g^dagger / Tr(g g^dagger).
inline ComplexMatrix random_density(std::mt19937_64& rng, std::size_t d) {
  const ComplexMatrix g = random_matrix(rng, d);
  ComplexMatrix rho = g * g.adjoint();
  return rho * (1.0 / rho.trace().real());
}

inline double max_entry(const ComplexMatrix& m) {
  double out = 0.0;
  for (const Complex& z : m.entries()) out = std::max(out, std::abs(z));
  return out;
}

}  // namespace qmaps::testing
