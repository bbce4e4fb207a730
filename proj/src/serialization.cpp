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

#include "qmaps/serialization.hpp"

#include <cmath>

namespace qmaps {

namespace {

const Json& require_field(const Json& j, const char* name) {
  if (!j.is_object()) throw FormatError("<document>", "expected a JSON object");
  const auto it = j.find(name);
  if (it == j.end()) throw FormatError(name, "missing");
  return *it;
}

std::vector<double> number_array(const Json& j, const char* name, std::size_t expected) {
  const Json& arr = require_field(j, name);
  if (!arr.is_array()) throw FormatError(name, "expected an array of numbers");
  if (arr.size() != expected) {
    throw FormatError(name, "expected " + std::to_string(expected) + " entries, got " +
                                std::to_string(arr.size()));
  }
  std::vector<double> out;
  out.reserve(expected);
  for (std::size_t k = 0; k < arr.size(); ++k) {
    if (!arr[k].is_number()) throw FormatError(name, "entry " + std::to_string(k) + " is not a number");
    out.push_back(arr[k].get<double>());
  }
  return out;
}

std::size_t positive_integer(const Json& j, const char* name) {
  const Json& v = require_field(j, name);
  if (!v.is_number_integer() || v.get<long long>() <= 0) throw FormatError(name, "expected a positive integer");
  return static_cast<std::size_t>(v.get<long long>());
}

}  // namespace

Json to_json(const ComplexMatrix& m) {
  Json re = Json::array();
  Json im = Json::array();
  for (const Complex& z : m.entries()) {
    re.push_back(z.real());
    im.push_back(z.imag());
  }
  return Json{{"dim", m.dim()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

ComplexMatrix matrix_from_json(const Json& j) {
  const std::size_t dim = positive_integer(j, "dim");
  const std::vector<double> re = number_array(j, "re", dim * dim);
  const std::vector<double> im = number_array(j, "im", dim * dim);
  std::vector<Complex> entries(dim * dim);
  for (std::size_t k = 0; k < entries.size(); ++k) entries[k] = {re[k], im[k]};
  return ComplexMatrix(dim, std::move(entries));
}

Json to_json(const QutritMapSpec& map) {
  Json j{{"kind", std::string(to_string(map.kind()))}};
  if (map.alpha()) j["alpha"] = *map.alpha();
  return j;
}

QutritMapSpec map_spec_from_json(const Json& j) {
  const Json& kind = require_field(j, "kind");
  if (!kind.is_string()) throw FormatError("kind", "expected a string");
  MapKind k;
  try {
    k = map_kind_from_string(kind.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw FormatError("kind", e.what());
  }
  std::optional<double> alpha;
  if (const auto it = j.find("alpha"); it != j.end()) {
    if (!it->is_number()) throw FormatError("alpha", "expected a number");
    alpha = it->get<double>();
  }
  return QutritMapSpec(k, alpha);
}

Json to_json(const ChoiMatrix& choi) {
  Json j = to_json(choi.matrix);
  j["source"] = to_json(choi.source);
  return j;
}

Json to_json(const DensityMatrix& rho) {
  Json j = to_json(rho.matrix());
  j["dims"] = Json::array({rho.dims().a, rho.dims().b});
  if (const auto& p = rho.provenance()) {
    j["family"] = std::string(to_string(p->family));
    j["parameter"] = p->parameter;
  }
  return j;
}

DensityMatrix state_from_json(const Json& j) {
  ComplexMatrix m = matrix_from_json(j);
  BipartiteDims dims = kQutritPair;
  if (const auto it = j.find("dims"); it != j.end()) {
    if (!it->is_array() || it->size() != 2 || !(*it)[0].is_number_integer() ||
        !(*it)[1].is_number_integer() || (*it)[0].get<long long>() <= 0 || (*it)[1].get<long long>() <= 0) {
      throw FormatError("dims", "expected [dA, dB] with positive integers");
    }
    dims = {(*it)[0].get<std::size_t>(), (*it)[1].get<std::size_t>()};
  }
  std::optional<StateFamilyPoint> provenance;
  if (const auto it = j.find("family"); it != j.end()) {
    if (!it->is_string()) throw FormatError("family", "expected a string");
    StateFamily family;
    try {
      family = state_family_from_string(it->get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw FormatError("family", e.what());
    }
    const Json& param = require_field(j, "parameter");
    if (!param.is_number()) throw FormatError("parameter", "expected a number");
    provenance = StateFamilyPoint{family, param.get<double>()};
  }
  return DensityMatrix(std::move(m), dims, provenance);
}

Json to_json(const Spectrum& spectrum) { return Json(spectrum.eigenvalues); }

Json to_json(const CmcReport& report) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < report.c_matrix.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < report.c_matrix.cols(); ++c) row.push_back(report.c_matrix(r, c));
    rows.push_back(std::move(row));
  }
  return Json{{"c_matrix", std::move(rows)},
              {"lhs", report.lhs},
              {"rhs", report.rhs},
              {"violated", report.violated}};
}

Json to_json(const DetectionReport& report) {
  Json verdicts = Json::array();
  for (const MapVerdict& v : report.map_verdicts) {
    verdicts.push_back({{"map", v.label}, {"min_eigenvalue", v.min_eigenvalue}, {"detected", v.detected}});
  }
  Json witnesses = Json::array();
  for (const WitnessReading& w : report.witness_values) {
    witnesses.push_back({{"witness", w.label}, {"value", w.value}, {"detected", w.detected}});
  }
  return Json{{"ppt_spectrum", to_json(report.ppt_spectrum)},
              {"ppt_min_eig", report.ppt_min_eig},
              {"npt", report.npt},
              {"map_verdicts", std::move(verdicts)},
              {"witness_values", std::move(witnesses)},
              {"cmc", to_json(report.cmc)}};
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

Json parse_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError("<document>", std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace qmaps
