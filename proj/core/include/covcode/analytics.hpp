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

// Closed-form quantities for (n, k, alpha)-codes under erasure of t qubits:
// the block-Haar averaged environment state, its distance to the nearest
// product state, min-entropy bounds driving the decoupling estimates, and the
// known lower bounds for U(1)-covariant codes.
//
// Binomial coefficients are handled in log space throughout so that
// n in the hundreds does not overflow.

#pragma once

#include <cstdint>
#include <vector>

namespace covcode {

/// ln C(n, k); -infinity when k < 0 or k > n.
double log_binomial(long long n, long long k);

/// C(n, k) as a double (0 when out of range).
double binomial(long long n, long long k);

/// C(n1, k1) / C(n2, k2), evaluated in log space; 0 if the numerator vanishes.
double binomial_ratio(long long n1, long long k1, long long n2, long long k2);

/// Binary entropy in bits with H(0) = H(1) = 0.
double binary_entropy(double x);

/// x (x-1) ... (x-m+1)
double falling_factorial(double x, int m);
/// x (x+1) ... (x+m-1)
double rising_factorial(double x, int m);

/// One diagonal block of Tr_{n-t} Phi_avg: logical weight j on R, erased
/// weight i on E, with eigenvalue 2^{-k} C(n-t, j+alpha-i) / C(n, j+alpha)
/// repeated C(k,j) C(t,i) times.
struct SpectrumEntry {
  int j = 0;
  int i = 0;
  double eigenvalue = 0.0;
  std::uint64_t multiplicity = 0;
};

struct SpectrumTable {
  int n = 0;
  int k = 0;
  int t = 0;
  int alpha = 0;
  std::vector<SpectrumEntry> entries;  // j-major, i-minor

  const SpectrumEntry& at(int j, int i) const {
    return entries[static_cast<std::size_t>(j * (t + 1) + i)];
  }
  double trace() const;
};

/// Throws ConfigError unless 0 <= k, 0 <= alpha, k + alpha <= n, 0 <= t <= n.
void validate_code_parameters(int n, int k, int t, int alpha);

/// Spectrum of the erased-side average state on E (t qubits) x R (k qubits).
/// k + t is limited to 62 so multiplicities stay exact.
SpectrumTable phi_avg_reduced(int n, int k, int t, int alpha);

/// Weight of each weight-i basis state of E in zeta_0 = Tr_R Tr_{n-t} Phi_avg.
double beta(int n, int k, int t, int alpha, int i);
std::vector<double> betas(int n, int k, int t, int alpha);

struct FidelityDistance {
  double fidelity = 1.0;
  /// 1 - F, accumulated as a Hellinger sum so it keeps full relative
  /// precision when F is within rounding of 1.
  double infidelity = 0.0;
  double purified = 0.0;
};

/// F(Tr_{n-t} Phi_avg, I/2^k (x) zeta_0) and the matching purified distance.
FidelityDistance choi_fidelity_closed(int n, int k, int t, int alpha);

/// ||Tr_{n-t} Phi_avg - I/2^k (x) zeta_0||_1 from the same spectrum.
double avg_state_trace_distance(int n, int k, int t, int alpha);

enum class BoundKind { kChoi, kWorst };

/// sqrt(tk) / (4 n sqrt(a(1-a))) for Choi, k sqrt(t) / (4 n sqrt(a(1-a)))
/// for worst case.
double leading_order(int n, int k, int t, double a, BoundKind which);

/// Interval for a conditional min-entropy together with the quantity it was
/// derived from (kappa for the Choi state, the per-x sum or chi for worst
/// case). All entropies in bits.
struct MinEntropyBounds {
  double lower = 0.0;
  double upper = 0.0;
  double kappa_or_chi = 0.0;
};

/// kappa = sum_i (sum_j C(t,j-i) C(k,j-alpha) / sqrt(2^k C(n,j)))^2 and
/// -log kappa <= H_min <= -log(kappa / (k+t+1)).
MinEntropyBounds kappa(int n, int k, int t, int alpha);

/// n min{H(alpha/n), H((alpha+k)/n)} - 2t - k, the entropy floor without its
/// O(log n) correction.
double entropy_floor(int n, int k, int t, int alpha);

/// Basis input |x> with |x| = wx: C(2t,t)/C(n,wx+alpha) sandwich.
MinEntropyBounds hmin_x(int n, int t, int alpha, int wx);

/// Superposition inputs (|x> +- |x'>)/sqrt2, (|x> +- i|x'>)/sqrt2:
/// -log(chi/2) <= H <= -log(chi/(2(t+1))).
MinEntropyBounds hmin_xxp(int n, int t, int alpha, int wx, int wxp);

/// F(rho^{x,x}_avg, zeta_0) for |x| = wx.
double worst_zeta_fidelity(int n, int k, int t, int alpha, int wx);
FidelityDistance worst_zeta_closed(int n, int k, int t, int alpha, int wx);

/// max over wx of P(rho^{x,x}_avg, zeta_0).
double worst_avg_distance(int n, int k, int t, int alpha);

struct LowerBounds {
  double choi = 0.0;
  double worst = 0.0;
};

/// Single-erasure lower bounds for U(1)-covariant codes:
/// C(k, ceil(k/2)) ceil(k/2) / (2^k n) and k / (2n).
LowerBounds lower_bounds(int n, int k);

enum class ErasureScheme {
  /// n/t disjoint groups of t qubits, each erased with probability t/n.
  kGrouped,
  /// Every t-subset erased with probability 1/C(n,t).
  kUniform,
};

struct GeneralLowerBounds {
  double choi = 0.0;
  double worst = 0.0;
  /// max_a (Delta T_a / q_a), evaluated in exact rational arithmetic.
  double denominator = 0.0;
};

/// Lower bounds for erasure of t qubits under the given grouping scheme.
/// The median of the logical charge spectrum is the lower median.
GeneralLowerBounds general_t_lower(int n, int k, int t, ErasureScheme scheme);

}  // namespace covcode
