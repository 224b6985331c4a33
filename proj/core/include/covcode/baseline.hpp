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

// Contrast case: codes drawn from the full unitary group, with no charge
// conservation. The comparison state is maximally mixed, so the Choi bound
// reduces to the decoupling term alone.

#pragma once

#include <cstdint>

#include "covcode/statistics.hpp"

namespace covcode {

/// sqrt(2 ||Tr_{n-t} Psi - I/2^{t+k}||_1) for one Haar-random encoding of k
/// qubits into n (n <= 12). Only the 2^k encoded columns are sampled; by
/// unitary invariance they are distributed as a Haar isometry.
double no_symmetry_choi_upper(int n, int k, int t, std::uint64_t seed);

struct NoSymmetryStats {
  int n = 0;
  int k = 0;
  int t = 0;
  /// n - k - 4t.
  int delta = 0;
  SampleSummary error;
};

/// Per-seed samples use derive_seed(master_seed, s).
NoSymmetryStats no_symmetry_baseline(int n, int k, int t, int seeds, std::uint64_t master_seed,
                                     unsigned workers = 1);

}  // namespace covcode
