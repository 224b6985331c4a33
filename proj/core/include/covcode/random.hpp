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

#pragma once

#include <cstdint>
#include <random>

#include "covcode/qstate.hpp"

namespace covcode {

/// SplitMix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x);

/// Counter-based split of a master seed: stream `counter` of `master`.
/// Distinct counters give statistically independent streams, so work items
/// can be seeded without sharing a generator.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t counter);

using Rng = std::mt19937_64;

/// rows x cols matrix of i.i.d. standard complex Gaussians.
CMatrix ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng);

/// Haar-distributed isometry (first `cols` columns of a Haar unitary):
/// Householder QR of a Ginibre matrix with R's diagonal phases moved into Q.
CMatrix haar_isometry(Eigen::Index rows, Eigen::Index cols, Rng& rng);

/// Haar-distributed unitary of dimension `dim`.
CMatrix haar_unitary(Eigen::Index dim, Rng& rng);

}  // namespace covcode
