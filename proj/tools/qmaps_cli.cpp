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

// qmaps command-line front end: parameter scans and detection reports.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qmaps/detection.hpp"
#include "qmaps/errors.hpp"
#include "qmaps/scan.hpp"
#include "qmaps/serialization.hpp"
#include "qmaps/states.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInvalid = 2;

struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::optional<std::string> alpha_range;
  std::optional<std::string> x_range;
  std::string format = "csv";
  std::optional<std::string> out;
  std::string state_file;
  std::string family;
  double parameter = 0.0;
};

qmaps::scan::AxisRange axis(const std::optional<std::string>& text, const qmaps::scan::AxisRange& fallback) {
  return text ? qmaps::scan::parse_range(*text) : fallback;
}

void emit(const std::string& text, const std::optional<std::string>& path) {
  if (!path) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream file(*path, std::ios::binary | std::ios::trunc);
  if (!file) throw InputError("--out: cannot open '" + *path + "' for writing");
  file << text;
  if (!file.flush()) throw InputError("--out: write to '" + *path + "' failed");
}

void emit_table(const qmaps::scan::Table& table, const Options& opt) {
  emit(opt.format == "json" ? qmaps::scan::render_json(table) : qmaps::scan::render_csv(table), opt.out);
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("state file '" + path + "': cannot open");
  std::ostringstream os;
  os << file.rdbuf();
  return os.str();
}

qmaps::DensityMatrix export_state(const std::string& family_name, double parameter) {
  qmaps::StateFamily family;
  try {
    family = qmaps::state_family_from_string(family_name);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("--family: ") + e.what());
  }
  qmaps::validate({family, parameter});
  switch (family) {
    case qmaps::StateFamily::TauX:
      return qmaps::tau_x(parameter);
    case qmaps::StateFamily::SpaChoi:
      return qmaps::spa_choi_state(parameter);
    case qmaps::StateFamily::MaxEntangled:
      return qmaps::max_entangled(static_cast<std::size_t>(parameter));
  }
  throw std::logic_error("unhandled state family");
}

void add_scan_flags(CLI::App* cmd, Options& opt, bool alpha, bool x) {
  if (alpha) cmd->add_option("--alpha-range", opt.alpha_range, "alpha axis as start:stop:count");
  if (x) cmd->add_option("--x-range", opt.x_range, "x axis as start:stop:count[:log]");
  cmd->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", opt.out, "output path (default: stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Positive-map entanglement detection toolkit for two qutrits"};
  app.require_subcommand(1);
  Options opt;

  auto* scan_minor = app.add_subcommand("scan-minor", "sign-carrying minor of (I x Lambda_alpha)(tau_x)");
  add_scan_flags(scan_minor, opt, true, true);
  auto* spa_spectrum = app.add_subcommand("spa-spectrum", "partial-transpose spectrum of the SPA Choi state");
  add_scan_flags(spa_spectrum, opt, true, false);
  auto* cmc_scan = app.add_subcommand("cmc-scan", "covariance matrix criterion on the SPA Choi state");
  add_scan_flags(cmc_scan, opt, true, false);
  auto* witness_tau = app.add_subcommand("witness-tau", "Tr[C_Lambda1 tau_x] over x");
  add_scan_flags(witness_tau, opt, false, true);

  auto* detect = app.add_subcommand("detect", "detection report for a serialized state");
  detect->add_option("FILE", opt.state_file, "state JSON file")->required();
  detect->add_option("--out", opt.out, "output path (default: stdout)");

  auto* exporter = app.add_subcommand("export", "write a family state as JSON");
  exporter->add_option("--family", opt.family, "tau-x, spa-choi or max-entangled")->required();
  exporter->add_option("--parameter", opt.parameter, "x, alpha or d")->required();
  exporter->add_option("--out", opt.out, "output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  namespace sc = qmaps::scan;
  try {
    if (scan_minor->parsed()) {
      emit_table(sc::scan_minor(axis(opt.alpha_range, sc::kDefaultAlphaAxis),
                                axis(opt.x_range, sc::kDefaultMinorXAxis)),
                 opt);
    } else if (spa_spectrum->parsed()) {
      emit_table(sc::spa_spectrum(axis(opt.alpha_range, sc::kDefaultAlphaAxis)), opt);
    } else if (cmc_scan->parsed()) {
      emit_table(sc::cmc_scan(axis(opt.alpha_range, sc::kDefaultAlphaAxis)), opt);
    } else if (witness_tau->parsed()) {
      emit_table(sc::witness_tau(axis(opt.x_range, sc::kDefaultWitnessXAxis)), opt);
    } else if (detect->parsed()) {
      const qmaps::DensityMatrix rho = qmaps::state_from_json(qmaps::parse_document(read_file(opt.state_file)));
      emit(qmaps::dump_canonical(qmaps::to_json(qmaps::full_report(rho))), opt.out);
    } else if (exporter->parsed()) {
      emit(qmaps::dump_canonical(qmaps::to_json(export_state(opt.family, opt.parameter))), opt.out);
    }
  } catch (const qmaps::ValidationError& e) {
    std::cerr << "error: invariant '" << e.invariant() << "' violated: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const qmaps::FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const sc::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const qmaps::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const qmaps::DimensionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}
