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

// Study drivers. Each returns a Report whose table is ready for CSV/JSON
// emission; `run` dispatches on config.mode.

#pragma once

#include "harness/report.hpp"

namespace covcode::harness {

/// Closed-form average-state term (purified and 1-norm, plus the optimal
/// diagonal comparison state) over n, with one log-log fit per alpha rule.
Report run_scaling(const ExperimentConfig& config);

/// Sampled block-Haar codes (n <= 12): decoupling deviation, Choi and
/// worst-case upper bounds, aggregated per (n, alpha).
Report run_montecarlo(const ExperimentConfig& config);

/// Upper bounds against the covariant-code lower bounds per (n, k, t).
Report run_compare(const ExperimentConfig& config);

/// kappa, hmin_x and hmin_xxp intervals over (n, k, t, alpha, wx, wxp).
Report run_minentropy(const ExperimentConfig& config);

/// Lower bounds (single erasure and both general-t schemes) over (n, k, t).
Report run_bounds(const ExperimentConfig& config);

/// Expected Choi error when each qubit is erased independently with
/// probability p, over (n, alpha, p).
Report run_mixed(const ExperimentConfig& config);

Report run(const ExperimentConfig& config);

struct MixedErasure {
  double expected_purified = 0.0;
  double expected_one_norm = 0.0;
  /// Probability mass of the erased counts that were not summed; also a
  /// bound on the truncation error of expected_purified.
  double truncated_mass = 0.0;
  int t_max = 0;
};

/// sum_t Binom(n, p)(t) err(t), stopping once the remaining mass is below
/// 1e-9. Requires 0 <= p <= 1/2.
MixedErasure mixed_erasure_error(int n, int k, int alpha, double p);

}  // namespace covcode::harness
