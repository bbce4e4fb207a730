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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qmaps::scan {

/// Bad user input to a scan (malformed range, domain violation).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// `count` points from start to stop inclusive, linear or log-spaced.
struct AxisRange {
  double start = 0.0;
  double stop = 0.0;
  std::size_t count = 0;
  bool log = false;

  std::vector<double> points() const;
};

/// Parses "start:stop:count" or "start:stop:count:log". Requires count >= 2,
/// start < stop, and start > 0 for log spacing.
AxisRange parse_range(std::string_view text);

/// Domain checks: alpha in (0, 1], x > 0.
void require_alpha_axis(const AxisRange& range);
void require_x_axis(const AxisRange& range);

inline const AxisRange kDefaultAlphaAxis{0.05, 1.0, 50, false};
inline const AxisRange kDefaultMinorXAxis{0.01, 1.0, 100, true};
inline const AxisRange kDefaultWitnessXAxis{0.1, 5.0, 50, false};

/// A cell is empty (no value), a real, an integer or a flag.
using Cell = std::variant<std::monostate, double, long long, bool>;

struct Table {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Columns: alpha, x, d_tau, sign, root. `root` is the bisection root of
/// d_tau in x for that alpha (empty when the x axis brackets no sign change).
Table scan_minor(const AxisRange& alphas, const AxisRange& xs);

/// Columns: alpha, ev1..ev9 (ascending partial-transpose spectrum of the SPA
/// Choi state), count_negative.
Table spa_spectrum(const AxisRange& alphas);

/// Columns: alpha, lhs, rhs, margin (= lhs - rhs), violated.
Table cmc_scan(const AxisRange& alphas);

/// Columns: x, witness_value, closed_form, detected for Tr[C_{Lambda_1} tau_x].
Table witness_tau(const AxisRange& xs);

/// Header line then one line per row; reals printed with 15 significant
/// digits, empty cells as nothing.
std::string render_csv(const Table& table);
/// {"command": ..., "columns": [...], "rows": [{column: value, ...}, ...]},
/// reals rounded to 15 significant digits, empty cells as null.
std::string render_json(const Table& table);

/// Value rounded to 15 significant digits.
double round_sig15(double value);

}  // namespace qmaps::scan
