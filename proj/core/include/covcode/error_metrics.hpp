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

// Certified upper bounds on the Choi and worst-case errors of a sampled
// (n, k, alpha)-code, obtained through the complementary channel:
//
//   eps_Choi <= sqrt(2 ||Tr_{n-t}[U Psi U^dag] - Tr_{n-t} Phi_avg||_1)
//             + P(Tr_{n-t} Phi_avg, zeta (x) I/2^k)
//   eps_worst <= max_x P(rho^{x,x}, zeta) + 2^k sqrt(max_{x!=x'} ||rho^{x,x'}||_1)

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "covcode/analytics.hpp"
#include "covcode/encoder.hpp"

namespace covcode {

enum class ZetaKind { kMarginal, kOptimalDiagonal, kCustom };

std::string_view to_string(ZetaKind kind);

/// Comparison state on the erased qubits.
struct ZetaChoice {
  ZetaKind kind = ZetaKind::kMarginal;
  /// Used only for kCustom; a state on the t erased qubits.
  std::optional<DensityOperator> custom;

  static ZetaChoice marginal() { return {}; }
  static ZetaChoice optimal_diagonal() { return {ZetaKind::kOptimalDiagonal, std::nullopt}; }
  static ZetaChoice user(DensityOperator zeta) { return {ZetaKind::kCustom, std::move(zeta)}; }
};

struct ChoiErrorReport {
  double deviation_term = 0.0;
  double avg_state_term = 0.0;
  /// deviation_term + avg_state_term.
  double total_upper = 0.0;
  ZetaKind zeta_used = ZetaKind::kMarginal;
};

struct WorstCaseReport {
  double eps_diag = 0.0;
  double eps_offdiag = 0.0;
  /// eps_diag + 2^k sqrt(eps_offdiag).
  double upper = 0.0;
};

/// Diagonal Tr_{n-t} Phi_avg on E (t qubits) followed by R (k qubits).
DensityOperator avg_environment_state(const SpectrumTable& spectrum);

/// zeta_0 = sum_i beta_i Pi_i on the t erased qubits.
DensityOperator marginal_zeta(int n, int k, int t, int alpha);

/// Tr_{n-t} of the block-Haar average of `input` (A then R), built from the
/// per-sector reference blocks Tr_A[Pi_j Psi Pi_j].
DensityOperator averaged_output(const CodeParams& params, const PureState& input);

/// ||Tr_{n-t}[U Psi U^dag] - Tr_{n-t} Psi_avg||_1 for `input` on A (x) R.
double decoupling_deviation(const BlockUnitary& unitary, const CodeParams& params,
                            const PureState& input);

ChoiErrorReport choi_error_upper(const BlockUnitary& unitary, const CodeParams& params,
                                 const ZetaChoice& zeta = ZetaChoice::marginal());

/// Rejects k > 4.
WorstCaseReport worst_case_error_upper(const BlockUnitary& unitary, const CodeParams& params,
                                       const DensityOperator& zeta);

struct OptimalZeta {
  /// Weight of every computational basis state of E (2^t entries).
  std::vector<double> weights;
  /// max over diagonal zeta of F(joint, zeta (x) uniform).
  double fidelity = 0.0;
  /// sqrt(1 - fidelity^2), accumulated as the Cauchy-Schwarz gap
  /// (1/2R) sum_e sum_{m,m'} (sqrt r_em - sqrt r_em')^2 so it stays accurate
  /// when the fidelity is within rounding of 1.
  double purified = 0.0;
};

/// Closed-form maximizer of sum_{e,m} sqrt(r_{e,m} zeta_e tau_m) for the
/// averaged spectrum: zeta_e proportional to c_e^2 with
/// c_e = sum_m sqrt(r_{e,m} tau_m), and F* = sqrt(sum_e c_e^2). The
/// reference marginal must be uniform on `reference_dim` states.
OptimalZeta optimal_diagonal_zeta(const SpectrumTable& spectrum, std::uint64_t reference_dim);

/// Same optimizer for an explicit joint operator on E (x) R. Only defined for
/// diagonal operators; anything else is rejected.
OptimalZeta optimal_diagonal_zeta(const CMatrix& joint, int e_qubits, int r_qubits);

/// F(Tr_{n-t} Phi_avg, zeta_0 (x) I/2^k) read off the spectrum (diagonal
/// shortcut, no matrices).
double marginal_zeta_fidelity(const SpectrumTable& spectrum);

}  // namespace covcode
