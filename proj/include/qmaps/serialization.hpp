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

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "qmaps/choi.hpp"
#include "qmaps/complex_matrix.hpp"
#include "qmaps/detection.hpp"
#include "qmaps/maps.hpp"
#include "qmaps/states.hpp"

namespace qmaps {

using Json = nlohmann::json;

/// A JSON document is syntactically valid but a field is missing or malformed.
class FormatError : public std::invalid_argument {
 public:
  FormatError(std::string field, const std::string& detail)
      : std::invalid_argument("field '" + field + "': " + detail), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// Matrices: {"dim": n, "re": [n*n reals, row-major], "im": [n*n reals]}.
Json to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

// Map specs: {"kind": "LambdaAlpha", "alpha": 0.5}; alpha only for the
// parameterized kinds.
Json to_json(const QutritMapSpec& map);
QutritMapSpec map_spec_from_json(const Json& j);

/// Matrix fields plus "source".
Json to_json(const ChoiMatrix& choi);

/// Matrix fields plus "dims": [dA, dB] and, when known, "family" and
/// "parameter".
Json to_json(const DensityMatrix& rho);
/// Missing "dims" defaults to a 3x3 split. Throws FormatError for malformed
/// fields and ValidationError when the matrix is not a density matrix.
DensityMatrix state_from_json(const Json& j);

Json to_json(const Spectrum& spectrum);
Json to_json(const CmcReport& report);
Json to_json(const DetectionReport& report);

/// Pretty-printed with two-space indent and a trailing newline. Doubles use
/// the shortest representation that reads back to the same bits.
std::string dump_canonical(const Json& j);

/// Parses text, turning syntax errors into FormatError on the field "<document>".
Json parse_document(const std::string& text);

}  // namespace qmaps
