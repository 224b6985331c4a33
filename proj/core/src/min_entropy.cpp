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

#include "covcode/min_entropy.hpp"

#include <cmath>
#include <numeric>

#include "covcode/errors.hpp"

namespace covcode {
namespace {

struct Schmidt {
  CMatrix left;   // columns a_i on P
  CMatrix right;  // columns b_i on Q
  Eigen::VectorXd coefficients;
};

Schmidt schmidt(const CMatrix& amps) {
  Eigen::JacobiSVD<CMatrix> svd(amps, Eigen::ComputeThinU | Eigen::ComputeThinV);
  // amps = U S V^dag, so psi = sum_i s_i |u_i> (x) conj(v_i).
  return {svd.matrixU(), svd.matrixV().conjugate(), svd.singularValues()};
}

// Tr_P of an operator on P (x) Q.
CMatrix trace_out_leading(const CMatrix& op, Eigen::Index dp, Eigen::Index dq) {
  CMatrix out = CMatrix::Zero(dq, dq);
  for (Eigen::Index p = 0; p < dp; ++p) out += op.block(p * dq, p * dq, dq, dq);
  return out;
}

double min_eigenvalue(const CMatrix& h) {
  CMatrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(sym, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double max_eigenvalue(const CMatrix& h) {
  CMatrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(sym, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

// Row-major flattening of an amplitude matrix (P index leading).
CVector flatten(const CMatrix& amps) {
  CVector v(amps.size());
  for (Eigen::Index p = 0; p < amps.rows(); ++p) {
    for (Eigen::Index q = 0; q < amps.cols(); ++q) v[p * amps.cols() + q] = amps(p, q);
  }
  return v;
}

// phi = sum_i a_i (x) b_i over all Schmidt pairs.
CVector alignment_vector(const Schmidt& s) {
  const Eigen::Index dp = s.left.rows();
  const Eigen::Index dq = s.right.rows();
  CVector phi = CVector::Zero(dp * dq);
  for (Eigen::Index i = 0; i < s.coefficients.size(); ++i) {
    for (Eigen::Index p = 0; p < dp; ++p) {
      phi.segment(p * dq, dq) += s.left(p, i) * s.right.col(i);
    }
  }
  return phi;
}

}  // namespace

PureMinEntropy min_entropy_pure(const PureState& psi, std::span<const int> p_qubits,
                                bool with_certificate) {
  CMatrix amps = amplitude_matrix(psi.amplitudes(), psi.num_qubits(), p_qubits);
  Schmidt s = schmidt(amps);
  const double sum = s.coefficients.sum();
  PureMinEntropy out;
  out.value = -2.0 * std::log2(sum);
  out.schmidt.assign(s.coefficients.data(), s.coefficients.data() + s.coefficients.size());
  if (!with_certificate) return out;

  const Eigen::Index dp = amps.rows();
  const Eigen::Index dq = amps.cols();
  if (dp * dq > 4096) throw ContractViolation("min_entropy_pure: certificate limited to dim 4096");

  PureMinEntropyCertificate cert;
  cert.sigma = CMatrix::Zero(dq, dq);
  for (Eigen::Index i = 0; i < s.coefficients.size(); ++i) {
    cert.sigma += (s.coefficients[i] / sum) * s.right.col(i) * s.right.col(i).adjoint();
  }
  const double scale = sum * sum;  // 2^{-H}
  cert.primal_value = scale * cert.sigma.trace().real();

  CVector vec = flatten(amps);
  CMatrix slack = scale * kron(CMatrix::Identity(dp, dp), cert.sigma) - vec * vec.adjoint();
  cert.primal_residual = min_eigenvalue(slack);

  CVector phi = alignment_vector(s);
  cert.y = phi * phi.adjoint();
  cert.dual_value = std::norm(phi.dot(vec));
  cert.dual_residual =
      max_eigenvalue(trace_out_leading(cert.y, dp, dq) - CMatrix::Identity(dq, dq));
  out.certificate = std::move(cert);
  return out;
}

BlockStateSandwich block_state_sandwich(std::span<const PureState> blocks,
                                        std::span<const double> weights,
                                        std::span<const int> ranks, int p2_qubits) {
  const std::size_t m = blocks.size();
  if (m == 0 || weights.size() != m || ranks.size() != m) {
    throw ContractViolation("block_state_sandwich: blocks, weights and ranks must align");
  }
  const int total_qubits = blocks[0].num_qubits();
  if (p2_qubits < 0 || p2_qubits > total_qubits) {
    throw ContractViolation("block_state_sandwich: p2_qubits out of range");
  }
  const Eigen::Index dp2 = Eigen::Index{1} << p2_qubits;
  const Eigen::Index dq = Eigen::Index{1} << (total_qubits - p2_qubits);
  const Eigen::Index dp1 = std::accumulate(ranks.begin(), ranks.end(), Eigen::Index{0});
  if (dp1 * dp2 * dq > 4096) throw ContractViolation("block_state_sandwich: dimension above 4096");

  std::vector<int> p2(static_cast<std::size_t>(p2_qubits));
  std::iota(p2.begin(), p2.end(), 0);

  const Eigen::Index dp = dp1 * dp2;
  CMatrix rho = CMatrix::Zero(dp * dq, dp * dq);
  CMatrix sigma = CMatrix::Zero(dq, dq);
  CMatrix y = CMatrix::Zero(dp * dq, dp * dq);
  BlockStateSandwich out;
  Eigen::Index offset = 0;
  for (std::size_t b = 0; b < m; ++b) {
    if (blocks[b].num_qubits() != total_qubits || ranks[b] < 1 || weights[b] < 0.0) {
      throw ContractViolation("block_state_sandwich: inconsistent block");
    }
    CMatrix amps = amplitude_matrix(blocks[b].amplitudes(), total_qubits, p2);
    Schmidt s = schmidt(amps);
    const double sum = s.coefficients.sum();
    const double s_i = weights[b] * sum * sum;
    out.sum_s += s_i;

    CVector vec = flatten(amps);
    CMatrix rho_i = weights[b] * (vec * vec.adjoint());
    CVector phi = alignment_vector(s);
    CMatrix y_i = phi * phi.adjoint();
    for (Eigen::Index c = 0; c < s.coefficients.size(); ++c) {
      sigma += weights[b] * sum * s.coefficients[c] * s.right.col(c) * s.right.col(c).adjoint();
    }
    const double inv_rank = 1.0 / ranks[b];
    for (int r = 0; r < ranks[b]; ++r) {
      const Eigen::Index base = (offset + r) * dp2 * dq;
      rho.block(base, base, dp2 * dq, dp2 * dq) += rho_i;
      y.block(base, base, dp2 * dq, dp2 * dq) += (inv_rank / static_cast<double>(m)) * y_i;
    }
    offset += ranks[b];
  }
  out.lower = out.sum_s / static_cast<double>(m);
  out.primal_value = sigma.trace().real();
  out.primal_residual = min_eigenvalue(kron(CMatrix::Identity(dp, dp), sigma) - rho);
  out.dual_value = (rho * y).trace().real();
  out.dual_residual = max_eigenvalue(trace_out_leading(y, dp, dq) - CMatrix::Identity(dq, dq));
  out.dual_min_eigenvalue = min_eigenvalue(y);
  return out;
}

}  // namespace covcode
