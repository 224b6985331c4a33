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

// Experiment configuration: which study to run, over which parameter grid,
// and where the report goes.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "covcode/error_metrics.hpp"

namespace covcode::harness {

enum class Mode { kScaling, kMonteCarlo, kCompare, kMinEntropy, kBounds, kMixed };

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view text);

enum class OutputFormat { kCsv, kJson };

std::string_view to_string(OutputFormat format);
OutputFormat parse_format(std::string_view text);
ZetaKind parse_zeta(std::string_view text);

/// Ancilla weight as a function of n: either a constant or floor(num * n / den),
/// the latter clamped to [0, n - k].
class AlphaRule {
 public:
  static AlphaRule fixed(int value);
  static AlphaRule fraction(int numerator, int denominator);
  /// Accepts "5", "n/2", "2n/3", "n".
  static AlphaRule parse(std::string_view text);

  /// ConfigError if a fixed value falls outside [0, n - k].
  int resolve(int n, int k) const;
  bool is_fraction() const { return denominator_ != 0; }
  std::string label() const;

  friend bool operator==(const AlphaRule&, const AlphaRule&) = default;

 private:
  int value_ = 0;
  int numerator_ = 0;
  int denominator_ = 0;
};

struct ExperimentConfig {
  Mode mode = Mode::kScaling;
  std::vector<int> n_values;
  int k = 1;
  int t = 1;
  /// Optional sweeps used by compare, bounds and minentropy; empty means {k} / {t}.
  std::vector<int> k_values;
  std::vector<int> t_values;
  std::vector<AlphaRule> alphas{AlphaRule::fraction(1, 2)};
  int seeds = 100;
  std::uint64_t master_seed = 0;
  std::string output_path;
  OutputFormat format = OutputFormat::kCsv;
  /// Per-qubit erasure probabilities for the mixed study.
  std::vector<double> p_values;
  ZetaKind zeta = ZetaKind::kMarginal;
  unsigned workers = 1;

  std::vector<int> ks() const { return k_values.empty() ? std::vector<int>{k} : k_values; }
  std::vector<int> ts() const { return t_values.empty() ? std::vector<int>{t} : t_values; }

  /// ConfigError naming every offending n if some alpha rule does not resolve.
  void validate() const;
};

/// "6,8,10", "6:12" (step 1), "6:12:2", or "20:400@20" (20 log-spaced
/// integers, duplicates removed).
std::vector<int> parse_n_range(std::string_view text);

/// `count` integers between lo and hi, log-spaced and rounded to nearest.
std::vector<int> log_spaced(int lo, int hi, int count);

/// Fields present in `json` override those of `base`.
ExperimentConfig config_from_json(const nlohmann::json& json, ExperimentConfig base = {});
nlohmann::ordered_json config_to_json(const ExperimentConfig& config);

/// Scaling grid for the slope table: k = t = 2, n in 20..400 (20 log-spaced
/// points), alpha in {1, 5, n/3, n/2}.
ExperimentConfig slope_table_config();

}  // namespace covcode::harness
