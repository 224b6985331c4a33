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

// (n, k, alpha)-codes: append a weight-alpha ancilla to k logical qubits and
// rotate with a charge-conserving unitary. Erasure of t physical qubits is
// studied through the complementary channel, i.e. the reduced state on the
// erased qubits (and the reference, when present).

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "covcode/qstate.hpp"
#include "covcode/sectors.hpp"

namespace covcode {

struct CodeParams {
  int n = 0;
  int k = 0;
  int alpha = 0;
  int t = 0;
  /// Erased physical qubits, sorted, |erased| = t.
  std::vector<int> erased;
  AncillaKind ancilla_kind = AncillaKind::kBasis;

  /// Erases the last t qubits by default.
  static CodeParams make(int n, int k, int alpha, int t,
                         AncillaKind kind = AncillaKind::kBasis);
  CodeParams with_erased(std::vector<int> qubits) const;

  /// ConfigError unless 1 <= k < n <= 20, 0 <= alpha <= n-k, 0 <= t <= n and
  /// `erased` holds t distinct sorted indices in 0..n-1.
  void validate() const;

  int ancilla_qubits() const { return n - k; }
  double charge_fraction() const { return static_cast<double>(alpha) / n; }
};

/// Encoded pure state on A (n physical qubits) followed by a reference R.
class EncodedState {
 public:
  const CodeParams& params() const { return params_; }
  const BlockUnitary& unitary() const { return unitary_; }
  const PureState& state() const { return state_; }
  int reference_qubits() const { return reference_qubits_; }

 private:
  friend EncodedState encode(const BlockUnitary&, const PureState&, const CodeParams&);
  EncodedState(CodeParams params, BlockUnitary unitary, PureState state, int reference_qubits)
      : params_(std::move(params)),
        unitary_(std::move(unitary)),
        state_(std::move(state)),
        reference_qubits_(reference_qubits) {}

  CodeParams params_;
  BlockUnitary unitary_;
  PureState state_;
  int reference_qubits_ = 0;
};

/// 2^{-k/2} sum_x |x>_L |x>_R on 2k qubits.
PureState maximally_entangled(int k);

/// (U (x) I_R)(|logical> (x) |psi_alpha>) with the ancilla inserted after the
/// k logical qubits and before R. `logical` holds L (k qubits) then R.
EncodedState encode(const BlockUnitary& unitary, const PureState& logical,
                    const CodeParams& params);

/// U |x>|psi_alpha> for every k-bit string x, as n-qubit vectors.
std::vector<CVector> encoded_basis(const BlockUnitary& unitary, const CodeParams& params);

/// max over theta and over the logical states {|x>, (|x>+|x'>)/sqrt2,
/// (|x>+i|x'>)/sqrt2} of || e^{iQ theta} E(rho) e^{-iQ theta}
/// - E(e^{iQ_k theta} rho e^{-iQ_k theta}) ||_1.
double covariance_defect(const BlockUnitary& unitary, const CodeParams& params,
                         std::span<const double> thetas);

/// Same check for an arbitrary dense 2^n x 2^n unitary (n <= 12).
double covariance_defect(const CMatrix& unitary, const CodeParams& params,
                         std::span<const double> thetas);

/// Reduced state of the encoded state on the erased qubits followed by R.
DensityOperator complementary_output(const EncodedState& encoded);

/// rho^{x,x'} = Tr_{n-t}[U (|x><x'| (x) psi_alpha) U^dag] on the erased
/// qubits. Trace-one state for x = x', traceless for x != x'.
CMatrix rho_xxp(const BlockUnitary& unitary, std::uint64_t x, std::uint64_t xp,
                const CodeParams& params);

/// rho^{x,x'} from precomputed encoded vectors.
CMatrix rho_from_encoded(const CVector& encoded_x, const CVector& encoded_xp,
                         const CodeParams& params);

}  // namespace covcode
