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

#include "harness/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "covcode/errors.hpp"

namespace covcode::harness {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view text, std::string_view what) {
  text = trim(text);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw ConfigError(std::string(what) + ": cannot parse integer '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

template <class T>
std::vector<T> json_list(const nlohmann::json& value, std::string_view key) {
  if (value.is_array()) return value.get<std::vector<T>>();
  if (value.is_number()) return {value.get<T>()};
  throw ConfigError("config: '" + std::string(key) + "' must be a number or a list");
}

}  // namespace

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::kScaling: return "scaling";
    case Mode::kMonteCarlo: return "montecarlo";
    case Mode::kCompare: return "compare";
    case Mode::kMinEntropy: return "minentropy";
    case Mode::kBounds: return "bounds";
    case Mode::kMixed: return "mixed";
  }
  return "unknown";
}

Mode parse_mode(std::string_view text) {
  for (Mode m : {Mode::kScaling, Mode::kMonteCarlo, Mode::kCompare, Mode::kMinEntropy,
                 Mode::kBounds, Mode::kMixed}) {
    if (to_string(m) == text) return m;
  }
  throw ConfigError("unknown mode '" + std::string(text) + "'");
}

std::string_view to_string(OutputFormat format) {
  return format == OutputFormat::kCsv ? "csv" : "json";
}

OutputFormat parse_format(std::string_view text) {
  if (text == "csv") return OutputFormat::kCsv;
  if (text == "json") return OutputFormat::kJson;
  throw ConfigError("unknown output format '" + std::string(text) + "' (csv|json)");
}

ZetaKind parse_zeta(std::string_view text) {
  if (text == "marginal") return ZetaKind::kMarginal;
  if (text == "optimal_diagonal") return ZetaKind::kOptimalDiagonal;
  throw ConfigError("unknown zeta '" + std::string(text) + "' (marginal|optimal_diagonal)");
}

AlphaRule AlphaRule::fixed(int value) {
  if (value < 0) throw ConfigError("alpha must be non-negative");
  AlphaRule r;
  r.value_ = value;
  return r;
}

AlphaRule AlphaRule::fraction(int numerator, int denominator) {
  if (numerator < 0 || denominator <= 0) throw ConfigError("alpha fraction must be non-negative");
  AlphaRule r;
  r.numerator_ = numerator;
  r.denominator_ = denominator;
  return r;
}

AlphaRule AlphaRule::parse(std::string_view text) {
  text = trim(text);
  const std::size_t npos = text.find('n');
  if (npos == std::string_view::npos) return fixed(parse_int(text, "alpha"));
  const std::string_view num = text.substr(0, npos);
  std::string_view rest = text.substr(npos + 1);
  const int numerator = num.empty() ? 1 : parse_int(num, "alpha numerator");
  int denominator = 1;
  if (!rest.empty()) {
    if (rest.front() != '/') throw ConfigError("alpha: expected 'n/<d>' in '" + std::string(text) + "'");
    denominator = parse_int(rest.substr(1), "alpha denominator");
  }
  return fraction(numerator, denominator);
}

int AlphaRule::resolve(int n, int k) const {
  if (!is_fraction()) {
    if (value_ > n - k) {
      throw ConfigError("alpha=" + std::to_string(value_) + " out of range [0, " +
                        std::to_string(n - k) + "] for n=" + std::to_string(n));
    }
    return value_;
  }
  const long long raw = static_cast<long long>(numerator_) * n / denominator_;
  return static_cast<int>(std::clamp<long long>(raw, 0, n - k));
}

std::string AlphaRule::label() const {
  if (!is_fraction()) return std::to_string(value_);
  std::string s = numerator_ == 1 ? "n" : std::to_string(numerator_) + "n";
  if (denominator_ != 1) s += "/" + std::to_string(denominator_);
  return s;
}

void ExperimentConfig::validate() const {
  if (n_values.empty()) throw ConfigError("n range is empty");
  if (alphas.empty()) throw ConfigError("no alpha rule given");
  if (seeds < 1) throw ConfigError("seeds must be positive");
  for (int n : n_values) {
    if (n < 2) throw ConfigError("n=" + std::to_string(n) + " is below 2");
  }
  for (int kk : ks()) {
    if (kk < 1) throw ConfigError("k must be at least 1");
  }
  for (int tt : ts()) {
    if (tt < 0) throw ConfigError("t must be non-negative");
  }
  for (const AlphaRule& rule : alphas) {
    for (int kk : ks()) {
      std::vector<int> bad;
      for (int n : n_values) {
        if (kk >= n) {
          bad.push_back(n);
          continue;
        }
        try {
          (void)rule.resolve(n, kk);
        } catch (const ConfigError&) {
          bad.push_back(n);
        }
      }
      if (!bad.empty()) {
        std::ostringstream msg;
        msg << "alpha=" << rule.label() << " (k=" << kk << ") does not resolve into [0, n-k] for n =";
        for (int n : bad) msg << ' ' << n;
        throw ConfigError(msg.str());
      }
    }
  }
  for (double p : p_values) {
    if (!(p >= 0.0 && p <= 0.5)) throw ConfigError("erasure probability p must lie in [0, 1/2]");
  }
}

std::vector<int> log_spaced(int lo, int hi, int count) {
  if (lo < 1 || hi < lo || count < 1) throw ConfigError("log_spaced: need 1 <= lo <= hi, count >= 1");
  std::vector<int> out;
  if (count == 1) return {lo};
  const double step = std::log(static_cast<double>(hi) / lo) / (count - 1);
  for (int i = 0; i < count; ++i) {
    const int v = static_cast<int>(std::lround(lo * std::exp(step * i)));
    if (out.empty() || out.back() != v) out.push_back(v);
  }
  out.back() = hi;
  return out;
}

std::vector<int> parse_n_range(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ConfigError("n range is empty");
  if (text.find(',') != std::string_view::npos) {
    std::vector<int> out;
    for (auto part : split(text, ',')) out.push_back(parse_int(part, "n range"));
    return out;
  }
  if (const auto at = text.find('@'); at != std::string_view::npos) {
    const auto bounds = split(text.substr(0, at), ':');
    if (bounds.size() != 2) throw ConfigError("n range: expected 'lo:hi@count'");
    return log_spaced(parse_int(bounds[0], "n range"), parse_int(bounds[1], "n range"),
                      parse_int(text.substr(at + 1), "n range count"));
  }
  const auto parts = split(text, ':');
  if (parts.size() == 1) return {parse_int(parts[0], "n range")};
  if (parts.size() > 3) throw ConfigError("n range: too many ':' fields");
  const int lo = parse_int(parts[0], "n range");
  const int hi = parse_int(parts[1], "n range");
  const int step = parts.size() == 3 ? parse_int(parts[2], "n range step") : 1;
  if (step < 1 || hi < lo) throw ConfigError("n range: need lo <= hi and a positive step");
  std::vector<int> out;
  for (int n = lo; n <= hi; n += step) out.push_back(n);
  return out;
}

ExperimentConfig config_from_json(const nlohmann::json& json, ExperimentConfig base) {
  if (!json.is_object()) throw ConfigError("config: top level must be an object");
  try {
    ExperimentConfig c = std::move(base);
    if (json.contains("mode")) c.mode = parse_mode(json.at("mode").get<std::string>());
    if (json.contains("n_range")) {
      const auto& v = json.at("n_range");
      c.n_values = v.is_string() ? parse_n_range(v.get<std::string>()) : json_list<int>(v, "n_range");
    }
    if (json.contains("k")) c.k = json.at("k").get<int>();
    if (json.contains("t")) c.t = json.at("t").get<int>();
    if (json.contains("k_values")) c.k_values = json_list<int>(json.at("k_values"), "k_values");
    if (json.contains("t_values")) c.t_values = json_list<int>(json.at("t_values"), "t_values");
    if (json.contains("alpha")) {
      const auto& v = json.at("alpha");
      c.alphas.clear();
      auto one = [](const nlohmann::json& a) {
        return a.is_string() ? AlphaRule::parse(a.get<std::string>()) : AlphaRule::fixed(a.get<int>());
      };
      if (v.is_array()) {
        for (const auto& a : v) c.alphas.push_back(one(a));
      } else {
        c.alphas.push_back(one(v));
      }
    }
    if (json.contains("seeds")) c.seeds = json.at("seeds").get<int>();
    if (json.contains("master_seed")) c.master_seed = json.at("master_seed").get<std::uint64_t>();
    if (json.contains("output_path")) c.output_path = json.at("output_path").get<std::string>();
    if (json.contains("output_format")) c.format = parse_format(json.at("output_format").get<std::string>());
    if (json.contains("p")) c.p_values = json_list<double>(json.at("p"), "p");
    if (json.contains("zeta")) c.zeta = parse_zeta(json.at("zeta").get<std::string>());
    if (json.contains("workers")) c.workers = json.at("workers").get<unsigned>();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
}

nlohmann::ordered_json config_to_json(const ExperimentConfig& c) {
  nlohmann::ordered_json j;
  j["mode"] = to_string(c.mode);
  j["n_range"] = c.n_values;
  j["k"] = c.k;
  j["t"] = c.t;
  if (!c.k_values.empty()) j["k_values"] = c.k_values;
  if (!c.t_values.empty()) j["t_values"] = c.t_values;
  auto alphas = nlohmann::ordered_json::array();
  for (const auto& a : c.alphas) alphas.push_back(a.label());
  j["alpha"] = alphas;
  j["seeds"] = c.seeds;
  j["master_seed"] = c.master_seed;
  j["output_path"] = c.output_path;
  j["output_format"] = to_string(c.format);
  if (!c.p_values.empty()) j["p"] = c.p_values;
  j["zeta"] = to_string(c.zeta);
  j["workers"] = c.workers;
  return j;
}

ExperimentConfig slope_table_config() {
  ExperimentConfig c;
  c.mode = Mode::kScaling;
  c.n_values = log_spaced(20, 400, 20);
  c.k = 2;
  c.t = 2;
  c.alphas = {AlphaRule::fixed(1), AlphaRule::fixed(5), AlphaRule::fraction(1, 3),
              AlphaRule::fraction(1, 2)};
  c.seeds = 1;
  return c;
}

}  // namespace covcode::harness
