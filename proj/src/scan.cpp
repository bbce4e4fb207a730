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

#include "qmaps/scan.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "json.hpp"
#include "qmaps/detection.hpp"
#include "qmaps/maps.hpp"
#include "qmaps/states.hpp"
#include "qmaps/witness.hpp"

namespace qmaps::scan {

namespace {

double parse_number(std::string_view token, std::string_view text) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(v)) {
    throw UsageError("range '" + std::string(text) + "': '" + std::string(token) + "' is not a number");
  }
  return v;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string format_cell(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
  };
  return std::visit(Visitor{}, cell);
}

nlohmann::json cell_json(const Cell& cell) {
  struct Visitor {
    nlohmann::json operator()(std::monostate) const { return nullptr; }
    nlohmann::json operator()(double v) const { return round_sig15(v); }
    nlohmann::json operator()(long long v) const { return v; }
    nlohmann::json operator()(bool v) const { return v; }
  };
  return std::visit(Visitor{}, cell);
}

long long sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

}  // namespace

std::vector<double> AxisRange::points() const {
  std::vector<double> out(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(count - 1);
    out[k] = log ? start * std::pow(stop / start, t) : start + (stop - start) * t;
  }
  out.front() = start;
  out.back() = stop;
  return out;
}

AxisRange parse_range(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t begin = 0;
  while (true) {
    const std::size_t colon = text.find(':', begin);
    parts.push_back(text.substr(begin, colon == std::string_view::npos ? colon : colon - begin));
    if (colon == std::string_view::npos) break;
    begin = colon + 1;
  }
  if (parts.size() != 3 && parts.size() != 4) {
    throw UsageError("range '" + std::string(text) + "': expected start:stop:count[:log]");
  }
  AxisRange r;
  r.start = parse_number(parts[0], text);
  r.stop = parse_number(parts[1], text);
  const double count = parse_number(parts[2], text);
  if (count < 2.0 || count != std::floor(count) || count > 1e6) {
    throw UsageError("range '" + std::string(text) + "': count must be an integer >= 2");
  }
  r.count = static_cast<std::size_t>(count);
  if (parts.size() == 4) {
    if (parts[3] != "log") throw UsageError("range '" + std::string(text) + "': unknown spacing '" +
                                            std::string(parts[3]) + "'");
    r.log = true;
  }
  if (!(r.start < r.stop)) throw UsageError("range '" + std::string(text) + "': start must be < stop");
  if (r.log && r.start <= 0.0) throw UsageError("range '" + std::string(text) + "': log spacing needs start > 0");
  return r;
}

void require_alpha_axis(const AxisRange& range) {
  if (!(range.start > 0.0 && range.stop <= 1.0)) {
    throw UsageError("alpha range must lie in (0, 1], got " + format_double(range.start) + ":" +
                     format_double(range.stop));
  }
}

void require_x_axis(const AxisRange& range) {
  if (!(range.start > 0.0)) throw UsageError("x range must be positive, got start " + format_double(range.start));
}

Table scan_minor(const AxisRange& alphas, const AxisRange& xs) {
  require_alpha_axis(alphas);
  require_x_axis(xs);
  Table t{"scan-minor", {"alpha", "x", "d_tau", "sign", "root"}, {}};
  const std::vector<double> x_points = xs.points();
  for (double alpha : alphas.points()) {
    std::vector<double> values;
    values.reserve(x_points.size());
    for (double x : x_points) values.push_back(minor_d_tau(alpha, x));

    Cell root;
    for (std::size_t k = 0; k + 1 < x_points.size(); ++k) {
      if (values[k] == 0.0) {
        root = x_points[k];
        break;
      }
      if ((values[k] < 0.0) != (values[k + 1] < 0.0)) {
        if (const auto r = minor_d_tau_root(alpha, x_points[k], x_points[k + 1])) root = *r;
        break;
      }
    }
    for (std::size_t k = 0; k < x_points.size(); ++k) {
      t.rows.push_back({alpha, x_points[k], values[k], sign_of(values[k]), root});
    }
  }
  return t;
}

Table spa_spectrum(const AxisRange& alphas) {
  require_alpha_axis(alphas);
  Table t{"spa-spectrum", {"alpha"}, {}};
  for (int k = 1; k <= 9; ++k) t.columns.push_back("ev" + std::to_string(k));
  t.columns.push_back("count_negative");
  for (double alpha : alphas.points()) {
    const Spectrum s = ppt_spectrum(spa_choi_state(alpha));
    std::vector<Cell> row{alpha};
    for (double ev : s.eigenvalues) row.emplace_back(ev);
    row.emplace_back(static_cast<long long>(s.count_below(kNegativeEigenvalue)));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table cmc_scan(const AxisRange& alphas) {
  require_alpha_axis(alphas);
  Table t{"cmc-scan", {"alpha", "lhs", "rhs", "margin", "violated"}, {}};
  for (double alpha : alphas.points()) {
    const CmcReport r = cmc_check(spa_choi_state(alpha));
    t.rows.push_back({alpha, r.lhs, r.rhs, r.lhs - r.rhs, r.violated});
  }
  return t;
}

Table witness_tau(const AxisRange& xs) {
  require_x_axis(xs);
  Table t{"witness-tau", {"x", "witness_value", "closed_form", "detected"}, {}};
  const WitnessOperator w = WitnessOperator::from_map(QutritMapSpec::lambda_alpha(1.0));
  for (double x : xs.points()) {
    const double value = witness_value(w, tau_x(x));
    const double closed = (3.0 - x) / (18.0 * (x * x + x + 1.0));
    t.rows.push_back({x, value, closed, value < kNegativeEigenvalue});
  }
  return t;
}

std::string render_csv(const Table& table) {
  std::ostringstream os;
  for (std::size_t c = 0; c < table.columns.size(); ++c) os << (c ? "," : "") << table.columns[c];
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << format_cell(row[c]);
    os << '\n';
  }
  return os.str();
}

std::string render_json(const Table& table) {
  nlohmann::ordered_json doc;
  doc["command"] = table.command;
  doc["columns"] = table.columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t c = 0; c < row.size(); ++c) obj[table.columns[c]] = cell_json(row[c]);
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

double round_sig15(double value) {
  if (!std::isfinite(value)) return value;
  return std::strtod(format_double(value).c_str(), nullptr);
}

}  // namespace qmaps::scan
