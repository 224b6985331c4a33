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

// Conditional min-entropy of pure bipartite states with explicit primal and
// dual SDP certificates, and the feasible-point construction that sandwiches
// the SDP value of block-structured states.
//
// Primal:  s = inf Tr sigma   s.t. I_P (x) sigma_Q >= rho_PQ, sigma >= 0
// Dual:    s = sup <rho, y>   s.t. Tr_P y <= I_Q,  y >= 0
// H_min(P|Q) = -log2 s.

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "covcode/qstate.hpp"

namespace covcode {

struct PureMinEntropyCertificate {
  /// Normalized primal state on Q: sum_i s_i |b_i><b_i| / sum_i s_i.
  CMatrix sigma;
  /// Dual operator |phi><phi| on P (x) Q with phi = sum_i |a_i>|b_i>.
  CMatrix y;
  /// 2^{-H}; the primal objective at sigma scaled to feasibility.
  double primal_value = 0.0;
  /// <psi| y |psi>.
  double dual_value = 0.0;
  /// Smallest eigenvalue of 2^{-H} I (x) sigma - psi; feasible if >= -1e-9.
  double primal_residual = 0.0;
  /// Largest eigenvalue of Tr_P y - I; feasible if <= 1e-9.
  double dual_residual = 0.0;

  bool feasible(double tolerance) const {
    return primal_residual >= -tolerance && dual_residual <= tolerance;
  }
};

struct PureMinEntropy {
  double value = 0.0;
  std::vector<double> schmidt;
  std::optional<PureMinEntropyCertificate> certificate;
};

/// H_min(P|Q) = -2 log2(sum of Schmidt coefficients) with P the qubits in
/// `p_qubits` (sorted) and Q the rest. Certificates need dim <= 4096.
PureMinEntropy min_entropy_pure(const PureState& psi, std::span<const int> p_qubits,
                                bool with_certificate = true);

/// Feasible points for rho = sum_i Pi_i (x) w_i psi_i, with Pi_i projectors
/// of rank ranks[i] onto consecutive basis states of P1 and psi_i pure on
/// P2 (x) Q (P2 = the leading `p2_qubits` qubits). The primal point certifies
/// s <= sum_i s_i, the dual point s >= (1/m) sum_i s_i.
struct BlockStateSandwich {
  double sum_s = 0.0;
  double lower = 0.0;
  double primal_value = 0.0;
  double primal_residual = 0.0;
  double dual_value = 0.0;
  double dual_residual = 0.0;
  double dual_min_eigenvalue = 0.0;

  bool feasible(double tolerance) const {
    return primal_residual >= -tolerance && dual_residual <= tolerance &&
           dual_min_eigenvalue >= -tolerance;
  }
};

BlockStateSandwich block_state_sandwich(std::span<const PureState> blocks,
                                        std::span<const double> weights,
                                        std::span<const int> ranks, int p2_qubits);

}  // namespace covcode
