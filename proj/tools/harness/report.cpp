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

#include "harness/report.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <limits>

#include "covcode/errors.hpp"

namespace covcode::harness {
namespace {

std::string cell_text(const Cell& cell) {
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&cell)) return format_number(*d);
  return std::get<std::string>(cell);
}

nlohmann::ordered_json cell_json(const Cell& cell) {
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return *i;
  if (const auto* d = std::get_if<double>(&cell)) {
    if (!std::isfinite(*d)) return nullptr;
    return *d;
  }
  return std::get<std::string>(cell);
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open output file " + path.string());
  out << content;
  if (!out) throw ConfigError("failed writing " + path.string());
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns_.size()) {
    throw ContractViolation("Table::add_row: expected " + std::to_string(columns_.size()) +
                            " cells, got " + std::to_string(row.size()));
  }
  rows_.push_back(std::move(row));
}

std::size_t Table::column(std::string_view name) const {
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (columns_[i] == name) return i;
  }
  throw ContractViolation("Table: no column '" + std::string(name) + "'");
}

double Table::number(std::size_t row, std::string_view name) const {
  const Cell& cell = rows_.at(row).at(column(name));
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return static_cast<double>(*i);
  if (const auto* d = std::get_if<double>(&cell)) return *d;
  throw ContractViolation("Table: column '" + std::string(name) + "' is not numeric");
}

const std::string& Table::text(std::size_t row, std::string_view name) const {
  const Cell& cell = rows_.at(row).at(column(name));
  if (const auto* s = std::get_if<std::string>(&cell)) return *s;
  throw ContractViolation("Table: column '" + std::string(name) + "' is not text");
}

const NamedFit& Report::fit(std::string_view metric, std::string_view series) const {
  for (const auto& f : fits) {
    if (f.metric == metric && f.series == series) return f;
  }
  throw ContractViolation("Report: no fit " + std::string(metric) + "[" + std::string(series) + "]");
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t c = 0; c < table.columns().size(); ++c) {
    if (c) out += ',';
    out += table.columns()[c];
  }
  out += '\n';
  for (const auto& row : table.rows()) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += cell_text(row[c]);
    }
    out += '\n';
  }
  return out;
}

Table parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t f = 0;
    for (;;) {
      const std::size_t comma = line.find(',', f);
      fields.emplace_back(line.substr(f, comma == std::string_view::npos ? comma : comma - f));
      if (comma == std::string_view::npos) break;
      f = comma + 1;
    }
    lines.push_back(std::move(fields));
  }
  if (lines.empty()) throw ContractViolation("parse_csv: no header");
  Table table(lines.front());
  for (std::size_t r = 1; r < lines.size(); ++r) {
    std::vector<Cell> row;
    for (const std::string& field : lines[r]) {
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
      if (ec == std::errc{} && ptr == field.data() + field.size() && !field.empty()) {
        row.emplace_back(v);
      } else {
        row.emplace_back(field);
      }
    }
    table.add_row(std::move(row));
  }
  return table;
}

nlohmann::ordered_json to_json(const Report& report, bool with_timestamp) {
  nlohmann::ordered_json j;
  j["config"] = config_to_json(report.config);
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : report.table.rows()) {
    nlohmann::ordered_json obj;
    for (std::size_t c = 0; c < row.size(); ++c) obj[report.table.columns()[c]] = cell_json(row[c]);
    rows.push_back(std::move(obj));
  }
  j["rows"] = std::move(rows);
  auto fits = nlohmann::ordered_json::array();
  for (const auto& f : report.fits) {
    fits.push_back({{"metric", f.metric},
                    {"series", f.series},
                    {"slope", f.fit.slope},
                    {"intercept", f.fit.intercept},
                    {"r_squared", f.fit.r_squared},
                    {"points", f.fit.points},
                    {"n_window", {f.n_min, f.n_max}}});
  }
  j["fits"] = std::move(fits);
  nlohmann::ordered_json meta;
  if (with_timestamp) meta["timestamp"] = utc_timestamp();
  meta["seed"] = report.config.master_seed;
  meta["version"] = COVCODE_VERSION;
  for (const auto& [key, value] : report.metadata) meta[key] = value;
  j["metadata"] = std::move(meta);
  return j;
}

std::string fits_to_csv(const std::vector<NamedFit>& fits) {
  Table table({"metric", "series", "slope", "intercept", "r_squared", "points", "n_min", "n_max"});
  for (const auto& f : fits) {
    table.add_row({f.metric, f.series, f.fit.slope, f.fit.intercept, f.fit.r_squared,
                   static_cast<std::int64_t>(f.fit.points), std::int64_t{f.n_min},
                   std::int64_t{f.n_max}});
  }
  return to_csv(table);
}

std::filesystem::path resolve_output_path(const ExperimentConfig& config) {
  std::filesystem::path path = config.output_path;
  if (path.empty()) {
    path = "covcode_" + std::string(to_string(config.mode)) + "." + std::string(to_string(config.format));
  }
  if (path.is_relative()) {
    if (const char* dir = std::getenv("COVCODE_OUTPUT_DIR"); dir != nullptr && *dir != '\0') {
      path = std::filesystem::path(dir) / path;
    }
  }
  return path;
}

std::filesystem::path write_report(const Report& report) {
  const auto path = resolve_output_path(report.config);
  if (report.config.format == OutputFormat::kJson) {
    write_file(path, to_json(report).dump(2) + "\n");
  } else {
    write_file(path, to_csv(report.table));
    if (!report.fits.empty()) {
      auto sidecar = path;
      sidecar.replace_extension();
      sidecar += ".fits.csv";
      write_file(sidecar, fits_to_csv(report.fits));
    }
  }
  return path;
}

}  // namespace covcode::harness
