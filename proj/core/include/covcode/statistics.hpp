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

// Summary statistics for per-seed samples and log-log slope fits.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace covcode {

struct SampleSummary {
  std::size_t count = 0;
  double mean = 0.0;
  /// Sample standard deviation (n - 1 denominator); 0 for a single sample.
  double stddev = 0.0;
  double std_error = 0.0;
  double median = 0.0;
  double q05 = 0.0;
  double q95 = 0.0;
  double min = 0.0;
  double max = 0.0;
};

/// Rejects empty input.
SampleSummary summarize(std::span<const double> samples);

/// Linear-interpolated quantile of already sorted data, q in [0, 1].
double sorted_quantile(std::span<const double> sorted, double q);

struct BinomialInterval {
  std::size_t successes = 0;
  std::size_t trials = 0;
  double fraction = 0.0;
  double lower = 0.0;
  double upper = 0.0;
};

/// Wilson score interval; z = 1.96 gives 95 %.
BinomialInterval wilson_interval(std::size_t successes, std::size_t trials,
                                 double z = 1.959963984540054);

struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::size_t points = 0;
};

/// Least squares of log10(y) against log10(x). Points with y <= 0 are
/// skipped; fewer than two usable points is a ContractViolation.
SlopeFit fit_loglog(std::span<const double> x, std::span<const double> y);

}  // namespace covcode
