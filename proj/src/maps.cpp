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

#include "qmaps/maps.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qmaps/choi.hpp"
#include "qmaps/errors.hpp"

namespace qmaps {

namespace {

constexpr std::array<std::pair<MapKind, std::string_view>, 8> kKindNames{{
    {MapKind::LambdaAlpha, "LambdaAlpha"},
    {MapKind::LambdaAlphaDual, "LambdaAlphaDual"},
    {MapKind::SpaLambdaAlpha, "SpaLambdaAlpha"},
    {MapKind::ChoiMap, "ChoiMap"},
    {MapKind::MillerOlkiewicz, "MillerOlkiewicz"},
    {MapKind::Depolarizing, "Depolarizing"},
    {MapKind::Transposition, "Transposition"},
    {MapKind::Identity, "Identity"},
}};

void require_qutrit(const ComplexMatrix& x, const char* what) {
  if (x.dim() != 3) {
    throw DimensionError(std::string(what) + ": expected a 3x3 input, got dim " +
                         std::to_string(x.dim()));
  }
}

}  // namespace

std::string_view to_string(MapKind kind) {
  for (const auto& [k, name] : kKindNames)
    if (k == kind) return name;
  return "Unknown";
}

MapKind map_kind_from_string(std::string_view name) {
  for (const auto& [k, n] : kKindNames)
    if (n == name) return k;
  throw std::invalid_argument("unknown map kind '" + std::string(name) + "'");
}

bool requires_alpha(MapKind kind) {
  return kind == MapKind::LambdaAlpha || kind == MapKind::LambdaAlphaDual ||
         kind == MapKind::SpaLambdaAlpha;
}

void require_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    std::ostringstream os;
    os << "alpha must lie in (0, 1], got " << alpha;
    throw DomainError(os.str());
  }
}

QutritMapSpec::QutritMapSpec(MapKind kind, std::optional<double> alpha) : kind_(kind), alpha_(alpha) {
  if (requires_alpha(kind)) {
    if (!alpha) throw DomainError(std::string(to_string(kind)) + " requires alpha");
    require_alpha(*alpha);
  } else if (alpha) {
    throw DomainError(std::string(to_string(kind)) + " takes no alpha");
  }
}

std::string QutritMapSpec::label() const {
  std::ostringstream os;
  os << to_string(kind_);
  if (alpha_) os << '(' << *alpha_ << ')';
  return os.str();
}

ComplexMatrix apply_lambda_alpha(double alpha, const ComplexMatrix& x) {
  require_alpha(alpha);
  require_qutrit(x, "apply_lambda_alpha");
  const double a = alpha;
  const double n = 1.0 / (a + 1.0 / a);
  return ComplexMatrix{
      {n * a * (x(0, 0) + x(1, 1)), -n * x(0, 1), -n * a * x(0, 2)},
      {-n * x(1, 0), n * (x(1, 1) + x(2, 2)) / a, -n * x(2, 1)},
      {-n * a * x(2, 0), -n * x(1, 2), n * (a * x(2, 2) + x(0, 0) / a)},
  };
}

ComplexMatrix apply_lambda_alpha_dual(double alpha, const ComplexMatrix& x) {
  require_alpha(alpha);
  require_qutrit(x, "apply_lambda_alpha_dual");
  const double a = alpha;
  const double n = 1.0 / (a + 1.0 / a);
  // Off-diagonal entries are self-adjoint under the HS pairing; the diagonal
  // collects, for each input diagonal slot, the output slots it feeds.
  return ComplexMatrix{
      {n * (a * x(0, 0) + x(2, 2) / a), -n * x(0, 1), -n * a * x(0, 2)},
      {-n * x(1, 0), n * (a * x(0, 0) + x(1, 1) / a), -n * x(2, 1)},
      {-n * a * x(2, 0), -n * x(1, 2), n * (a * x(2, 2) + x(1, 1) / a)},
  };
}

ComplexMatrix apply_choi_map(const ComplexMatrix& x) {
  require_qutrit(x, "apply_choi_map");
  return ComplexMatrix{
      {x(0, 0) + x(2, 2), -x(0, 1), -x(0, 2)},
      {-x(1, 0), x(1, 1) + x(0, 0), -x(1, 2)},
      {-x(2, 0), -x(2, 1), x(2, 2) + x(1, 1)},
  };
}

ComplexMatrix apply_miller_olkiewicz(const ComplexMatrix& x) {
  require_qutrit(x, "apply_miller_olkiewicz");
  const double r = 1.0 / std::sqrt(2.0);
  const Complex half = 0.5 * (x(0, 0) + x(1, 1));
  return ComplexMatrix{
      {half, 0.0, r * x(0, 2)},
      {0.0, half, r * x(2, 1)},
      {r * x(2, 0), r * x(1, 2), x(2, 2)},
  };
}

ComplexMatrix apply_depolarizing(std::size_t d, const ComplexMatrix& x) {
  if (x.dim() != d) {
    throw DimensionError("apply_depolarizing: input dim " + std::to_string(x.dim()) +
                         " does not match d = " + std::to_string(d));
  }
  return ComplexMatrix::identity(d) * (x.trace() / static_cast<double>(d));
}

ComplexMatrix apply_spa_mixture(double alpha, const ComplexMatrix& x) {
  const SpaParameters params = spa_parameters(alpha);
  return params.p_star * apply_depolarizing(3, x) + (1.0 - params.p_star) * apply_lambda_alpha(alpha, x);
}

ComplexMatrix apply_spa(double alpha, const ComplexMatrix& x) {
  require_alpha(alpha);
  require_qutrit(x, "apply_spa");
  const double a2 = alpha * alpha;
  const double s = std::sqrt(4.0 * a2 + 1.0);
  const double den = 2.0 * a2 + 3.0 * s - 1.0;
  const double off1 = -2.0 * alpha / den;
  const double off2 = -2.0 * a2 / den;
  ComplexMatrix out{
      {(x(2, 2) * (s - 1.0) + (x(0, 0) + x(1, 1)) * (2.0 * a2 + s - 1.0)) / den, off1 * x(0, 1),
       off2 * x(0, 2)},
      {off1 * x(1, 0), (x(0, 0) * (s - 1.0) + (x(1, 1) + x(2, 2)) * (s + 1.0)) / den, off1 * x(2, 1)},
      {off2 * x(2, 0), off1 * x(1, 2),
       (-x(1, 1) + x(2, 2) * (2.0 * a2 - 1.0) + x(0, 0) * (s + 1.0) + (x(1, 1) + x(2, 2)) * s) / den},
  };
#ifdef QMAPS_CROSS_CHECK
  const double gap = max_abs_diff(out, apply_spa_mixture(alpha, x));
  if (gap > 1e-12 * std::max(1.0, x.max_abs())) {
    throw std::logic_error("apply_spa: closed form and mixture disagree by " + std::to_string(gap));
  }
#endif
  return out;
}

ComplexMatrix apply(const QutritMapSpec& map, const ComplexMatrix& x) {
  switch (map.kind()) {
    case MapKind::LambdaAlpha:
      return apply_lambda_alpha(*map.alpha(), x);
    case MapKind::LambdaAlphaDual:
      return apply_lambda_alpha_dual(*map.alpha(), x);
    case MapKind::SpaLambdaAlpha:
      return apply_spa(*map.alpha(), x);
    case MapKind::ChoiMap:
      return apply_choi_map(x);
    case MapKind::MillerOlkiewicz:
      return apply_miller_olkiewicz(x);
    case MapKind::Depolarizing:
      return apply_depolarizing(3, x);
    case MapKind::Transposition:
      require_qutrit(x, "transposition");
      return x.transpose();
    case MapKind::Identity:
      require_qutrit(x, "identity");
      return x;
  }
  throw std::logic_error("apply: unhandled map kind");
}

ComplexMatrix extend_one_sided(const QutritMapSpec& map, const ComplexMatrix& rho) {
  if (rho.dim() != 9) {
    throw DimensionError("extend_one_sided: expected a 9x9 operator, got dim " +
                         std::to_string(rho.dim()));
  }
  ComplexMatrix out(9);
  ComplexMatrix block(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = 0; l < 3; ++l) block(k, l) = rho(3 * i + k, 3 * j + l);
      const ComplexMatrix image = apply(map, block);
      for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = 0; l < 3; ++l) out(3 * i + k, 3 * j + l) = image(k, l);
    }
  return out;
}

}  // namespace qmaps
