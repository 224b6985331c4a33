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

// Tabular reports and their CSV / JSON serializations.

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "covcode/statistics.hpp"
#include "harness/config.hpp"
#include "json.hpp"

namespace covcode::harness {

using Cell = std::variant<std::int64_t, double, std::string>;

class Table {
 public:
  Table() = default;
  explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<Cell>>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }

  /// Row length must match the header.
  void add_row(std::vector<Cell> row);

  /// Index of `name`; ContractViolation if absent.
  std::size_t column(std::string_view name) const;
  /// Numeric value of a cell (integers widened).
  double number(std::size_t row, std::string_view name) const;
  const std::string& text(std::size_t row, std::string_view name) const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

struct NamedFit {
  std::string metric;
  std::string series;
  SlopeFit fit;
  int n_min = 0;
  int n_max = 0;
};

struct Report {
  Report() = default;
  Report(ExperimentConfig cfg, Table tbl) : config(std::move(cfg)), table(std::move(tbl)) {}

  ExperimentConfig config;
  Table table;
  std::vector<NamedFit> fits;
  std::vector<std::pair<std::string, std::string>> metadata;

  const NamedFit& fit(std::string_view metric, std::string_view series) const;
};

/// Shortest representation that parses back to the same double; "nan",
/// "inf", "-inf" for non-finite values.
std::string format_number(double value);

/// Header plus one line per row. No locale, no timestamp.
std::string to_csv(const Table& table);
/// Parses text produced by to_csv; cells come back as double when they parse
/// fully as numbers, else as strings.
Table parse_csv(std::string_view text);

/// {"config", "rows", "fits", "metadata"}; non-finite numbers become null.
nlohmann::ordered_json to_json(const Report& report, bool with_timestamp = true);

/// Fits as a small CSV (metric, series, slope, intercept, r_squared, points,
/// n_min, n_max).
std::string fits_to_csv(const std::vector<NamedFit>& fits);

/// Relative paths (and the empty default) are placed under
/// $COVCODE_OUTPUT_DIR when it is set, else the working directory.
std::filesystem::path resolve_output_path(const ExperimentConfig& config);

/// Writes the report in the configured format. CSV output also gets a
/// "<stem>.fits.csv" sidecar when the report has fits.
std::filesystem::path write_report(const Report& report);

}  // namespace covcode::harness
