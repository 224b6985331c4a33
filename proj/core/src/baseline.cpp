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

#include "covcode/baseline.hpp"

#include <cmath>
#include <numeric>
#include <vector>

#include "covcode/errors.hpp"
#include "covcode/parallel.hpp"
#include "covcode/qstate.hpp"
#include "covcode/random.hpp"

namespace covcode {

double no_symmetry_choi_upper(int n, int k, int t, std::uint64_t seed) {
  if (n < 2 || n > 12) throw ConfigError("no_symmetry_baseline: n must lie in 2..12");
  if (k < 1 || k >= n) throw ConfigError("no_symmetry_baseline: need 1 <= k < n");
  if (t < 0 || t > n) throw ConfigError("no_symmetry_baseline: need 0 <= t <= n");
  if (t == 0) return 0.0;

  Rng rng(seed);
  const auto pdim = Eigen::Index{1} << n;
  const auto ldim = Eigen::Index{1} << k;
  const CMatrix isometry = haar_isometry(pdim, ldim, rng);

  // |Psi> = 2^{-k/2} sum_x V|x> (x) |x>, physical register first.
  CVector joint(pdim * ldim);
  const double scale = 1.0 / std::sqrt(static_cast<double>(ldim));
  for (Eigen::Index a = 0; a < pdim; ++a) {
    for (Eigen::Index x = 0; x < ldim; ++x) joint[a * ldim + x] = scale * isometry(a, x);
  }
  std::vector<int> keep;
  for (int q = n - t; q < n + k; ++q) keep.push_back(q);
  const DensityOperator out = partial_trace(PureState::normalized(std::move(joint)), keep);
  const auto dim = out.dim();
  const CMatrix diff = out.matrix() - CMatrix::Identity(dim, dim) / static_cast<double>(dim);
  return std::sqrt(2.0 * trace_norm(diff));
}

NoSymmetryStats no_symmetry_baseline(int n, int k, int t, int seeds, std::uint64_t master_seed,
                                     unsigned workers) {
  if (seeds < 1) throw ConfigError("no_symmetry_baseline: need at least one seed");
  const auto samples = parallel_map(static_cast<std::size_t>(seeds), workers, [&](std::size_t s) {
    return no_symmetry_choi_upper(n, k, t, derive_seed(master_seed, s));
  });
  return {n, k, t, n - k - 4 * t, summarize(samples)};
}

}  // namespace covcode
