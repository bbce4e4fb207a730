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
#include <string>
#include <string_view>

#include "qmaps/complex_matrix.hpp"

namespace qmaps {

enum class MapKind {
  LambdaAlpha,
  LambdaAlphaDual,
  SpaLambdaAlpha,
  ChoiMap,
  MillerOlkiewicz,
  Depolarizing,
  Transposition,
  Identity,
};

std::string_view to_string(MapKind kind);
/// Inverse of to_string; throws std::invalid_argument for unknown names.
MapKind map_kind_from_string(std::string_view name);
bool requires_alpha(MapKind kind);

/// A named linear map on 3x3 matrices. Immutable once built.
class QutritMapSpec {
 public:
  /// Throws DomainError when alpha is missing for a parameterized kind,
  /// present for a fixed one, or outside (0, 1].
  QutritMapSpec(MapKind kind, std::optional<double> alpha = std::nullopt);

  static QutritMapSpec lambda_alpha(double alpha) { return {MapKind::LambdaAlpha, alpha}; }
  static QutritMapSpec lambda_alpha_dual(double alpha) { return {MapKind::LambdaAlphaDual, alpha}; }
  static QutritMapSpec spa(double alpha) { return {MapKind::SpaLambdaAlpha, alpha}; }
  static QutritMapSpec choi_map() { return QutritMapSpec(MapKind::ChoiMap); }
  static QutritMapSpec miller_olkiewicz() { return QutritMapSpec(MapKind::MillerOlkiewicz); }
  static QutritMapSpec depolarizing() { return QutritMapSpec(MapKind::Depolarizing); }
  static QutritMapSpec transposition() { return QutritMapSpec(MapKind::Transposition); }
  static QutritMapSpec identity() { return QutritMapSpec(MapKind::Identity); }

  MapKind kind() const noexcept { return kind_; }
  const std::optional<double>& alpha() const noexcept { return alpha_; }
  /// Short human label, e.g. "LambdaAlpha(0.5)".
  std::string label() const;

  friend bool operator==(const QutritMapSpec&, const QutritMapSpec&) = default;

 private:
  MapKind kind_;
  std::optional<double> alpha_;
};

/// Throws DomainError unless 0 < alpha <= 1.
void require_alpha(double alpha);

ComplexMatrix apply_lambda_alpha(double alpha, const ComplexMatrix& x);
/// Hilbert-Schmidt adjoint of apply_lambda_alpha.
ComplexMatrix apply_lambda_alpha_dual(double alpha, const ComplexMatrix& x);
/// Choi's map: diagonal (x11 + x33, x22 + x11, x33 + x22), off-diagonals
/// negated. Doubles the trace.
ComplexMatrix apply_choi_map(const ComplexMatrix& x);
ComplexMatrix apply_miller_olkiewicz(const ComplexMatrix& x);
/// Tr(x)/d * I_d, with d = x.dim().
ComplexMatrix apply_depolarizing(std::size_t d, const ComplexMatrix& x);

/// Optimal structural physical approximation of Lambda_alpha, evaluated from
/// its closed-form entries. Builds with QMAPS_CROSS_CHECK (the default) also
/// evaluate the mixture form and throw std::logic_error if the two disagree
/// by more than 1e-12.
ComplexMatrix apply_spa(double alpha, const ComplexMatrix& x);
/// p* Lambda_dep(x) + (1 - p*) Lambda_alpha(x).
ComplexMatrix apply_spa_mixture(double alpha, const ComplexMatrix& x);

ComplexMatrix apply(const QutritMapSpec& map, const ComplexMatrix& x);

/// (I (x) map) on a 9x9 operator: applies the map to each 3x3 block.
ComplexMatrix extend_one_sided(const QutritMapSpec& map, const ComplexMatrix& rho);

}  // namespace qmaps
