// Copyright 2026 The covcode Authors
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

// covcode: command-line front end for the scaling, Monte Carlo, comparison,
// min-entropy, lower-bound and mixed-erasure studies.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "covcode/errors.hpp"
#include "harness/runs.hpp"

namespace {

using covcode::harness::AlphaRule;
using covcode::harness::ExperimentConfig;
using covcode::harness::Mode;

constexpr int kExitConfig = 2;
constexpr int kExitInvariant = 3;

struct Flags {
  std::string config_file;
  std::string n_range;
  int k = 0;
  int t = 0;
  std::string k_values;
  std::string t_values;
  std::string alpha;
  int seeds = 0;
  std::uint64_t seed = 0;
  std::string out;
  std::string format;
  std::string p;
  std::string zeta;
  unsigned workers = 0;
  bool slope_table = false;
  bool quiet = false;
};

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  for (char c : text) {
    if (c == ',') {
      out.push_back(item);
      item.clear();
    } else {
      item += c;
    }
  }
  out.push_back(item);
  return out;
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  for (const auto& item : split_commas(text)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw covcode::ConfigError("cannot parse number '" + item + "'");
    }
  }
  return out;
}

void add_common(CLI::App& sub, Flags& f) {
  sub.add_option("--config", f.config_file, "JSON config file; flags override its values");
  sub.add_option("--n-range", f.n_range, "n values: 6,8,10 | 6:12 | 6:12:2 | 20:400@20");
  sub.add_option("--k", f.k, "logical qubits");
  sub.add_option("--t", f.t, "erased qubits");
  sub.add_option("--k-values", f.k_values, "comma list of k (compare, bounds, minentropy)");
  sub.add_option("--t-values", f.t_values, "comma list of t (compare, bounds, minentropy)");
  sub.add_option("--alpha", f.alpha, "ancilla weight rules, e.g. 4 or n/2 or 1,5,n/3,n/2");
  sub.add_option("--seeds", f.seeds, "number of Monte Carlo seeds");
  sub.add_option("--seed", f.seed, "64-bit master seed");
  sub.add_option("--out", f.out, "output file, '-' for stdout");
  sub.add_option("--format", f.format, "csv | json");
  sub.add_option("--workers", f.workers, "worker threads (0 = hardware concurrency)");
  sub.add_flag("--quiet", f.quiet, "do not print the fit summary");
}

ExperimentConfig build_config(Mode mode, const CLI::App& sub, const Flags& f) {
  ExperimentConfig c;
  if (mode == Mode::kScaling && f.slope_table) c = covcode::harness::slope_table_config();
  c.mode = mode;
  if (!f.config_file.empty()) {
    std::ifstream in(f.config_file);
    if (!in) throw covcode::ConfigError("cannot read config file " + f.config_file);
    nlohmann::json json;
    try {
      in >> json;
    } catch (const nlohmann::json::exception& e) {
      throw covcode::ConfigError(std::string("config file: ") + e.what());
    }
    c = covcode::harness::config_from_json(json, c);
    c.mode = mode;
  }
  auto given = [&](const char* name) { return sub.count(name) > 0; };
  if (given("--n-range")) c.n_values = covcode::harness::parse_n_range(f.n_range);
  if (given("--k")) c.k = f.k;
  if (given("--t")) c.t = f.t;
  if (given("--k-values")) c.k_values = covcode::harness::parse_n_range(f.k_values);
  if (given("--t-values")) c.t_values = covcode::harness::parse_n_range(f.t_values);
  if (given("--alpha")) {
    c.alphas.clear();
    for (const auto& item : split_commas(f.alpha)) c.alphas.push_back(AlphaRule::parse(item));
  }
  if (given("--seeds")) c.seeds = f.seeds;
  if (given("--seed")) c.master_seed = f.seed;
  if (given("--out")) c.output_path = f.out;
  if (given("--format")) c.format = covcode::harness::parse_format(f.format);
  if (given("--workers")) c.workers = f.workers;
  if (mode == Mode::kMonteCarlo && given("--zeta")) c.zeta = covcode::harness::parse_zeta(f.zeta);
  if (mode == Mode::kMixed && given("--p")) c.p_values = parse_doubles(f.p);
  return c;
}

void emit(const covcode::harness::Report& report, bool quiet) {
  using namespace covcode::harness;
  if (report.config.output_path == "-") {
    if (report.config.format == OutputFormat::kJson) {
      std::cout << to_json(report).dump(2) << "\n";
    } else {
      std::cout << to_csv(report.table);
    }
  } else {
    const auto path = write_report(report);
    if (!quiet) std::cerr << "wrote " << report.table.size() << " rows to " << path.string() << "\n";
  }
  if (quiet) return;
  for (const auto& f : report.fits) {
    std::cerr << "fit " << f.metric << " [alpha=" << f.series << "] slope " << format_number(f.fit.slope)
              << " r2 " << format_number(f.fit.r_squared) << " n " << f.n_min << ".." << f.n_max << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random charge-conserving codes under erasure: closed forms and Monte Carlo studies"};
  app.require_subcommand(1);
  Flags flags;

  struct Sub {
    Mode mode;
    const char* name;
    const char* help;
  };
  const Sub subs[] = {
      {Mode::kScaling, "scaling", "closed-form Choi error against n with log-log slope fits"},
      {Mode::kMonteCarlo, "montecarlo", "sampled codes: decoupling deviation and error bounds"},
      {Mode::kCompare, "compare", "upper bounds against covariant-code lower bounds"},
      {Mode::kMinEntropy, "minentropy", "min-entropy intervals over the grid"},
      {Mode::kBounds, "bounds", "lower bounds for single and general erasure"},
      {Mode::kMixed, "mixed", "expected error under independent per-qubit erasure"},
  };
  std::vector<std::pair<Mode, CLI::App*>> commands;
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    add_common(*sub, flags);
    if (s.mode == Mode::kScaling) {
      sub->add_flag("--slope-table", flags.slope_table,
                    "preset grid: k=t=2, n=20..400 (20 log-spaced), alpha in {1,5,n/3,n/2}");
    }
    if (s.mode == Mode::kMonteCarlo) {
      sub->add_option("--zeta", flags.zeta, "marginal | optimal_diagonal");
    }
    if (s.mode == Mode::kMixed) sub->add_option("--p", flags.p, "comma list of erasure probabilities");
    commands.emplace_back(s.mode, sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    for (const auto& [mode, sub] : commands) {
      if (!sub->parsed()) continue;
      const ExperimentConfig config = build_config(mode, *sub, flags);
      emit(covcode::harness::run(config), flags.quiet);
    }
  } catch (const covcode::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const covcode::ContractViolation& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitConfig;
  } catch (const covcode::InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return EXIT_FAILURE;
  }
  return EXIT_SUCCESS;
}
