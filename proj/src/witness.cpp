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

#include "qmaps/witness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "qmaps/choi.hpp"
#include "qmaps/errors.hpp"

namespace qmaps {

WitnessOperator::WitnessOperator(ComplexMatrix matrix, std::string label)
    : matrix_(std::move(matrix)), label_(std::move(label)) {
  if (matrix_.dim() != 9) {
    throw ValidationError("dimension", static_cast<double>(matrix_.dim()),
                          "witness must be 9x9, got dim " + std::to_string(matrix_.dim()));
  }
  const double defect = matrix_.hermiticity_defect();
  const double allowed = 1e-12 * matrix_.max_abs();
  if (defect > allowed) {
    throw ValidationError("hermitian", defect - allowed, "witness is not Hermitian");
  }
}

WitnessOperator WitnessOperator::from_map(const QutritMapSpec& map) {
  return WitnessOperator(choi_of(map).matrix, "Choi[" + map.label() + "]");
}

double witness_value(const WitnessOperator& w, const DensityMatrix& rho) {
  if (rho.matrix().dim() != 9) throw DimensionError("witness_value: state must be 9x9");
  const Complex v = hs_inner(w.matrix(), rho.matrix());
  if (std::abs(v.imag()) > 1e-12) {
    throw std::logic_error("witness_value: expectation has imaginary part " + std::to_string(v.imag()));
  }
  return v.real();
}

double product_expectation(const ComplexMatrix& w, const Qutrit& gamma, const Qutrit& delta) {
  std::array<Complex, 9> v{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 3; ++k) v[3 * i + k] = gamma[i] * delta[k];
  Complex s = 0.0;
  for (std::size_t r = 0; r < 9; ++r) {
    Complex row = 0.0;
    for (std::size_t c = 0; c < 9; ++c) row += w(r, c) * v[c];
    s += std::conj(v[r]) * row;
  }
  return s.real();
}

namespace {

Qutrit random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Qutrit v;
  double norm = 0.0;
  for (auto& z : v) {
    z = {g(rng), g(rng)};
    norm += std::norm(z);
  }
  norm = std::sqrt(norm);
  for (auto& z : v) z /= norm;
  return v;
}

Qutrit from_angles(const std::array<double, 4>& t) {
  return {Complex(std::cos(t[0]), 0.0), std::sin(t[0]) * std::cos(t[1]) * std::polar(1.0, t[2]),
          std::sin(t[0]) * std::sin(t[1]) * std::polar(1.0, t[3])};
}

// (gamma^dagger (x) I) W (gamma (x) I)
ComplexMatrix partial_expectation(const ComplexMatrix& w, const Qutrit& gamma) {
  ComplexMatrix out(3);
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t l = 0; l < 3; ++l) {
      Complex s = 0.0;
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) s += std::conj(gamma[i]) * w(3 * i + k, 3 * j + l) * gamma[j];
      out(k, l) = s;
    }
  return out;
}

double inner_minimum(const ComplexMatrix& w, const std::array<double, 4>& angles) {
  return hermitian_eigenvalues(partial_expectation(w, from_angles(angles))).min();
}

struct Candidate {
  std::array<double, 4> angles;
  double value;
};

}  // namespace

double block_positivity_spot_check(const ComplexMatrix& w, std::size_t samples, std::uint64_t seed) {
  if (w.dim() != 9) throw DimensionError("block_positivity_spot_check: operator must be 9x9");
  std::mt19937_64 rng(seed);
  double lowest = std::numeric_limits<double>::infinity();
  for (std::size_t n = 0; n < samples; ++n) {
    const Qutrit g = random_unit(rng);
    const Qutrit d = random_unit(rng);
    lowest = std::min(lowest, product_expectation(w, g, d));
  }
  return lowest;
}

WeakOptimality weak_optimality_check(const WitnessOperator& w) {
  const ComplexMatrix& m = w.matrix();
  const double spot = block_positivity_spot_check(m, 10000, 0x5eedULL);
  if (spot < -1e-10) {
    std::ostringstream os;
    os << "weak_optimality_check: " << w.label() << " is negative on a product vector (" << spot << ")";
    throw std::invalid_argument(os.str());
  }

  constexpr int kGrid = 12;
  constexpr double kPi = std::numbers::pi;
  const double polar_step = (kPi / 2.0) / (kGrid - 1);
  const double phase_step = 2.0 * kPi / kGrid;

  std::vector<Candidate> grid;
  grid.reserve(kGrid * kGrid * kGrid * kGrid);
  for (int a = 0; a < kGrid; ++a)
    for (int b = 0; b < kGrid; ++b)
      for (int c = 0; c < kGrid; ++c)
        for (int d = 0; d < kGrid; ++d) {
          const std::array<double, 4> t{a * polar_step, b * polar_step, c * phase_step, d * phase_step};
          grid.push_back({t, inner_minimum(m, t)});
        }

  constexpr std::size_t kSeeds = 4;
  std::partial_sort(grid.begin(), grid.begin() + kSeeds, grid.end(),
                    [](const Candidate& x, const Candidate& y) { return x.value < y.value; });

  Candidate best = grid.front();
  for (std::size_t s = 0; s < kSeeds; ++s) {
    Candidate cur = grid[s];
    double step = polar_step;
    while (step > 1e-10) {
      bool improved = false;
      for (std::size_t k = 0; k < 4; ++k)
        for (double dir : {1.0, -1.0}) {
          std::array<double, 4> trial = cur.angles;
          trial[k] += dir * step;
          const double v = inner_minimum(m, trial);
          if (v < cur.value) {
            cur = {trial, v};
            improved = true;
          }
        }
      if (!improved) step *= 0.5;
    }
    if (cur.value < best.value) best = cur;
  }

  WeakOptimality out;
  out.gamma = from_angles(best.angles);
  const EigenSystem inner = hermitian_eigensystem(partial_expectation(m, out.gamma));
  for (std::size_t k = 0; k < 3; ++k) out.delta[k] = inner.vectors(k, 0);
  out.value = product_expectation(m, out.gamma, out.delta);
  out.found = out.value <= 1e-9;
  return out;
}

const GellMannBasis& gellmann_basis() {
  static const GellMannBasis basis = [] {
    const Complex i(0.0, 1.0);
    const double r3 = 1.0 / std::sqrt(3.0);
    GellMannBasis b{{
        ComplexMatrix::identity(3),
        ComplexMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 0}},
        ComplexMatrix{{0, -i, 0}, {i, 0, 0}, {0, 0, 0}},
        ComplexMatrix{{1, 0, 0}, {0, -1, 0}, {0, 0, 0}},
        ComplexMatrix{{0, 0, 1}, {0, 0, 0}, {1, 0, 0}},
        ComplexMatrix{{0, 0, -i}, {0, 0, 0}, {i, 0, 0}},
        ComplexMatrix{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}},
        ComplexMatrix{{0, 0, 0}, {0, 0, -i}, {0, i, 0}},
        ComplexMatrix{{r3, 0, 0}, {0, r3, 0}, {0, 0, -2.0 * r3}},
    }};
    for (std::size_t k = 0; k < 9; ++k) b.norms[k] = hs_inner(b.matrices[k], b.matrices[k]).real();
    return b;
  }();
  return basis;
}

RealMatrix decompose_in_gellmann(const ComplexMatrix& w) {
  if (w.dim() != 9) throw DimensionError("decompose_in_gellmann: operator must be 9x9");
  const GellMannBasis& g = gellmann_basis();
  RealMatrix c(9, 9);
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j) {
      const Complex proj = hs_inner(kron(g.matrices[i], g.matrices[j]), w) / (g.norms[i] * g.norms[j]);
      if (std::abs(proj.imag()) > 1e-12) {
        throw ValidationError("hermitian", std::abs(proj.imag()),
                              "Gell-Mann coefficient has an imaginary part");
      }
      c(i, j) = proj.real();
    }
  return c;
}

RealMatrix decompose_in_gellmann(const WitnessOperator& w) { return decompose_in_gellmann(w.matrix()); }

ComplexMatrix reconstruct_from_gellmann(const RealMatrix& coefficients) {
  if (coefficients.rows() != 9 || coefficients.cols() != 9)
    throw DimensionError("reconstruct_from_gellmann: expected a 9x9 table");
  const GellMannBasis& g = gellmann_basis();
  ComplexMatrix out(9);
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j)
      if (coefficients(i, j) != 0.0) out += coefficients(i, j) * kron(g.matrices[i], g.matrices[j]);
  return out;
}

}  // namespace qmaps
