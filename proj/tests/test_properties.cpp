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

#include <cmath>
#include <memory>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "covcode/analytics.hpp"
#include "covcode/encoder.hpp"
#include "covcode/error_metrics.hpp"
#include "covcode/qstate.hpp"
#include "covcode/random.hpp"
#include "oracles.hpp"

namespace covcode {
namespace {

constexpr double kSlack = 1e-9;

TEST(Property, DistanceSandwich) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const int qubits = 1 + trial % 3;
    const DensityOperator rho = trial % 4 == 0 ? DensityOperator::from_pure(oracle::random_pure(qubits, rng))
                                               : oracle::random_density(qubits, rng);
    const DensityOperator sigma = oracle::random_density(qubits, rng);
    const double one = trace_norm(rho.matrix() - sigma.matrix());
    const double p = purified_distance(rho, sigma);
    EXPECT_LE(0.5 * one, p + kSlack);
    EXPECT_LE(p, std::sqrt(2.0 * one) + kSlack);
    EXPECT_GE(fidelity(rho, sigma), 0.0);
    EXPECT_LE(fidelity(rho, sigma), 1.0 + kSlack);
  }
}

TEST(Property, CommutingFidelityIsClassical) {
  std::mt19937_64 rng(62);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> p(8), q(8);
    double sp = 0.0, sq = 0.0;
    for (int i = 0; i < 8; ++i) {
      sp += (p[static_cast<std::size_t>(i)] = u(rng));
      sq += (q[static_cast<std::size_t>(i)] = u(rng));
    }
    double expect = 0.0;
    for (std::size_t i = 0; i < 8; ++i) {
      p[i] /= sp;
      q[i] /= sq;
      expect += std::sqrt(p[i] * q[i]);
    }
    // Rotate both into a shared random basis.
    const CMatrix basis = haar_unitary(8, rng);
    const CMatrix a = basis * Eigen::Map<Eigen::VectorXd>(p.data(), 8).cast<Complex>().asDiagonal() * basis.adjoint();
    const CMatrix b = basis * Eigen::Map<Eigen::VectorXd>(q.data(), 8).cast<Complex>().asDiagonal() * basis.adjoint();
    EXPECT_NEAR(fidelity(DensityOperator(a), DensityOperator(b)), expect, kSlack);
  }
}

TEST(Property, PurifiedDistanceTriangle) {
  std::mt19937_64 rng(63);
  for (int trial = 0; trial < 100; ++trial) {
    const DensityOperator a = oracle::random_density(2, rng);
    const DensityOperator b = oracle::random_density(2, rng);
    const DensityOperator c = oracle::random_density(2, rng);
    EXPECT_LE(purified_distance(a, c), purified_distance(a, b) + purified_distance(b, c) + kSlack);
  }
}

TEST(Property, PartialTraceComposes) {
  std::mt19937_64 rng(64);
  for (int trial = 0; trial < 10; ++trial) {
    const DensityOperator rho = oracle::random_density(4, rng);
    // Drop qubit 3, then drop what was qubit 2.
    const std::vector<int> keep3{0, 1, 2};
    const std::vector<int> keep2{0, 1};
    const DensityOperator step = partial_trace(partial_trace(rho, keep3), keep2);
    const DensityOperator direct = partial_trace(rho, keep2);
    EXPECT_LT((step.matrix() - direct.matrix()).cwiseAbs().maxCoeff(), 1e-14);
    // Same for a pure input.
    const PureState psi = oracle::random_pure(4, rng);
    EXPECT_LT((partial_trace(partial_trace(psi, keep3), keep2).matrix() - partial_trace(psi, keep2).matrix())
                  .cwiseAbs()
                  .maxCoeff(),
              1e-14);
  }
}

TEST(Property, SpectrumNonNegativeAndNormalized) {
  std::mt19937_64 rng(65);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 400)(rng);
    const int k = std::uniform_int_distribution<int>(1, std::min(4, n - 1))(rng);
    const int t = std::uniform_int_distribution<int>(0, std::min(5, n))(rng);
    const int alpha = std::uniform_int_distribution<int>(0, n - k)(rng);
    const SpectrumTable s = phi_avg_reduced(n, k, t, alpha);
    EXPECT_NEAR(s.trace(), 1.0, 1e-11);
    for (const auto& e : s.entries) EXPECT_GE(e.eigenvalue, 0.0);
    const MinEntropyBounds kap = kappa(n, k, t, alpha);
    EXPECT_LE(kap.lower, kap.upper);
    const auto fd = choi_fidelity_closed(n, k, t, alpha);
    EXPECT_GE(fd.purified, 0.0);
    EXPECT_LE(fd.fidelity, 1.0);
  }
}

// Replacing zeta_0 by another comparison state cannot undercut eps_diag(zeta_0)
// by more than the distance from zeta_0 to the best averaged diagonal state.
TEST(Property, WorstCaseZetaOrdering) {
  const int n = 7, k = 1, t = 2, alpha = 3;
  const auto params = CodeParams::make(n, k, alpha, t);
  const auto decomposition = std::make_shared<const SectorDecomposition>(hamming_sectors(n));
  const DensityOperator zeta0 = marginal_zeta(n, k, t, alpha);
  const double gap = worst_avg_distance(n, k, t, alpha);
  std::mt19937_64 rng(66);
  for (int s = 0; s < 20; ++s) {
    const BlockUnitary u = sample_block_haar(decomposition, derive_seed(66, s));
    const double base = worst_case_error_upper(u, params, zeta0).eps_diag;
    for (int trial = 0; trial < 5; ++trial) {
      const DensityOperator other = oracle::random_density(t, rng);
      const double eps = worst_case_error_upper(u, params, other).eps_diag;
      EXPECT_GE(eps, base - gap - kSlack);
      EXPECT_GE(eps, base - purified_distance(other, zeta0) - kSlack);
    }
  }
}

}  // namespace
}  // namespace covcode
