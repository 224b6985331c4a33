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

#include "covcode/encoder.hpp"

#include <algorithm>
#include <cmath>

#include "covcode/errors.hpp"

namespace covcode {
namespace {

using ApplyFn = std::function<CVector(const CVector&)>;

// |phi> (x) |psi_alpha> (x) spectator, where `logical` carries L then R.
CVector append_ancilla(const CVector& logical, int k, int r, const PureState& ancilla) {
  const std::uint64_t rdim = std::uint64_t{1} << r;
  const std::uint64_t ldim = std::uint64_t{1} << k;
  const std::uint64_t sdim = ancilla.dim();
  CVector out = CVector::Zero(static_cast<Eigen::Index>(ldim * sdim * rdim));
  for (std::uint64_t l = 0; l < ldim; ++l) {
    for (std::uint64_t s = 0; s < sdim; ++s) {
      const Complex as = ancilla[s];
      if (as == Complex(0.0)) continue;
      for (std::uint64_t rr = 0; rr < rdim; ++rr) {
        out[static_cast<Eigen::Index>(((l * sdim + s) * rdim) + rr)] =
            logical[static_cast<Eigen::Index>(l * rdim + rr)] * as;
      }
    }
  }
  return out;
}

void apply_charge_phase(CVector& v, double theta) {
  for (Eigen::Index x = 0; x < v.size(); ++x) {
    v[x] *= std::polar(1.0, theta * hamming_weight(static_cast<std::uint64_t>(x)));
  }
}

double defect_impl(const ApplyFn& apply, const CodeParams& params, std::span<const double> thetas) {
  params.validate();
  if (thetas.empty()) throw ContractViolation("covariance_defect: empty angle list");
  const PureState ancilla = ancilla_state(params.ancilla_qubits(), params.alpha, params.ancilla_kind);
  const std::uint64_t ldim = std::uint64_t{1} << params.k;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  std::vector<CVector> inputs;
  for (std::uint64_t x = 0; x < ldim; ++x) {
    CVector v = CVector::Zero(static_cast<Eigen::Index>(ldim));
    v[static_cast<Eigen::Index>(x)] = 1.0;
    inputs.push_back(v);
    for (std::uint64_t xp = x + 1; xp < ldim; ++xp) {
      CVector mu = CVector::Zero(static_cast<Eigen::Index>(ldim));
      mu[static_cast<Eigen::Index>(x)] = inv_sqrt2;
      mu[static_cast<Eigen::Index>(xp)] = inv_sqrt2;
      inputs.push_back(mu);
      CVector nu = mu;
      nu[static_cast<Eigen::Index>(xp)] = Complex(0.0, inv_sqrt2);
      inputs.push_back(nu);
    }
  }

  double worst = 0.0;
  for (const CVector& phi : inputs) {
    const CVector encoded = apply(append_ancilla(phi, params.k, 0, ancilla));
    for (double theta : thetas) {
      CVector lhs = encoded;
      apply_charge_phase(lhs, theta);
      CVector rotated = phi;
      apply_charge_phase(rotated, theta);
      const CVector rhs = apply(append_ancilla(rotated, params.k, 0, ancilla));
      worst = std::max(worst, pure_trace_distance(lhs, rhs));
    }
  }
  return worst;
}

std::vector<int> output_qubits(const CodeParams& params, int reference_qubits) {
  std::vector<int> keep = params.erased;
  for (int q = 0; q < reference_qubits; ++q) keep.push_back(params.n + q);
  return keep;
}

}  // namespace

CodeParams CodeParams::make(int n, int k, int alpha, int t, AncillaKind kind) {
  CodeParams p{n, k, alpha, t, {}, kind};
  for (int q = n - t; q < n; ++q) p.erased.push_back(q);
  p.validate();
  return p;
}

CodeParams CodeParams::with_erased(std::vector<int> qubits) const {
  CodeParams p = *this;
  std::sort(qubits.begin(), qubits.end());
  p.erased = std::move(qubits);
  p.t = static_cast<int>(p.erased.size());
  p.validate();
  return p;
}

void CodeParams::validate() const {
  auto fail = [&](const std::string& why) {
    throw ConfigError("CodeParams(n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                      ", alpha=" + std::to_string(alpha) + ", t=" + std::to_string(t) + "): " + why);
  };
  if (n < 2 || n > 20) fail("n must lie in 2..20");
  if (k < 1 || k >= n) fail("need 1 <= k < n");
  if (alpha < 0 || alpha > n - k) fail("need 0 <= alpha <= n - k");
  if (t < 0 || t > n) fail("need 0 <= t <= n");
  if (static_cast<int>(erased.size()) != t) fail("erased set must hold t qubits");
  for (std::size_t i = 0; i < erased.size(); ++i) {
    if (erased[i] < 0 || erased[i] >= n) fail("erased qubit index out of range");
    if (i > 0 && erased[i] <= erased[i - 1]) fail("erased qubits must be distinct and sorted");
  }
}

PureState maximally_entangled(int k) {
  if (k < 0 || k > 12) throw ContractViolation("maximally_entangled: k outside 0..12");
  const std::uint64_t d = std::uint64_t{1} << k;
  CVector v = CVector::Zero(static_cast<Eigen::Index>(d * d));
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::uint64_t x = 0; x < d; ++x) v[static_cast<Eigen::Index>(x * d + x)] = amp;
  return PureState(std::move(v));
}

EncodedState encode(const BlockUnitary& unitary, const PureState& logical, const CodeParams& params) {
  params.validate();
  if (unitary.num_qubits() != params.n) {
    throw ContractViolation("encode: unitary acts on " + std::to_string(unitary.num_qubits()) +
                            " qubits, code has n = " + std::to_string(params.n));
  }
  const int r = logical.num_qubits() - params.k;
  if (r < 0) throw ContractViolation("encode: logical state has fewer than k qubits");
  if (params.n + r > 24) throw ContractViolation("encode: n + r above 24 qubits");
  const PureState ancilla = ancilla_state(params.ancilla_qubits(), params.alpha, params.ancilla_kind);
  CVector joint = append_ancilla(logical.amplitudes(), params.k, r, ancilla);
  CVector out = unitary.apply(joint, r);
  return EncodedState(params, unitary, PureState::normalized(std::move(out)), r);
}

std::vector<CVector> encoded_basis(const BlockUnitary& unitary, const CodeParams& params) {
  params.validate();
  if (unitary.num_qubits() != params.n) throw ContractViolation("encoded_basis: size mismatch");
  const PureState ancilla = ancilla_state(params.ancilla_qubits(), params.alpha, params.ancilla_kind);
  const std::uint64_t ldim = std::uint64_t{1} << params.k;
  std::vector<CVector> out;
  out.reserve(static_cast<std::size_t>(ldim));
  for (std::uint64_t x = 0; x < ldim; ++x) {
    CVector e = CVector::Zero(static_cast<Eigen::Index>(ldim));
    e[static_cast<Eigen::Index>(x)] = 1.0;
    out.push_back(unitary.apply(append_ancilla(e, params.k, 0, ancilla)));
  }
  return out;
}

double covariance_defect(const BlockUnitary& unitary, const CodeParams& params,
                         std::span<const double> thetas) {
  if (unitary.num_qubits() != params.n) throw ContractViolation("covariance_defect: size mismatch");
  return defect_impl([&](const CVector& v) { return unitary.apply(v); }, params, thetas);
}

double covariance_defect(const CMatrix& unitary, const CodeParams& params,
                         std::span<const double> thetas) {
  const auto dim = Eigen::Index{1} << params.n;
  if (params.n > 12 || unitary.rows() != dim || unitary.cols() != dim) {
    throw ContractViolation("covariance_defect: dense unitary must be 2^n x 2^n with n <= 12");
  }
  return defect_impl([&](const CVector& v) -> CVector { return unitary * v; }, params, thetas);
}

DensityOperator complementary_output(const EncodedState& encoded) {
  const auto keep = output_qubits(encoded.params(), encoded.reference_qubits());
  return partial_trace(encoded.state(), keep);
}

CMatrix rho_from_encoded(const CVector& encoded_x, const CVector& encoded_xp,
                         const CodeParams& params) {
  return reduced_cross(encoded_x, encoded_xp, params.n, params.erased);
}

CMatrix rho_xxp(const BlockUnitary& unitary, std::uint64_t x, std::uint64_t xp,
                const CodeParams& params) {
  params.validate();
  const std::uint64_t ldim = std::uint64_t{1} << params.k;
  if (x >= ldim || xp >= ldim) throw ContractViolation("rho_xxp: logical string has more than k bits");
  if (unitary.num_qubits() != params.n) throw ContractViolation("rho_xxp: size mismatch");
  const PureState ancilla = ancilla_state(params.ancilla_qubits(), params.alpha, params.ancilla_kind);
  auto encoded = [&](std::uint64_t s) {
    CVector e = CVector::Zero(static_cast<Eigen::Index>(ldim));
    e[static_cast<Eigen::Index>(s)] = 1.0;
    return unitary.apply(append_ancilla(e, params.k, 0, ancilla));
  };
  const CVector a = encoded(x);
  const CVector b = x == xp ? a : encoded(xp);
  return rho_from_encoded(a, b, params);
}

}  // namespace covcode
