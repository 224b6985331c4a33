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

#include "covcode/error_metrics.hpp"

#include <algorithm>
#include <cmath>

#include "covcode/errors.hpp"

namespace covcode {
namespace {

std::vector<double> spectrum_diagonal(const SpectrumTable& spectrum) {
  const std::uint64_t edim = std::uint64_t{1} << spectrum.t;
  const std::uint64_t rdim = std::uint64_t{1} << spectrum.k;
  std::vector<double> diag(static_cast<std::size_t>(edim * rdim));
  for (std::uint64_t e = 0; e < edim; ++e) {
    const int i = hamming_weight(e);
    for (std::uint64_t m = 0; m < rdim; ++m) {
      diag[static_cast<std::size_t>(e * rdim + m)] = spectrum.at(hamming_weight(m), i).eigenvalue;
    }
  }
  return diag;
}

// Shared optimizer once the joint diagonal r(e, m) is known.
// `exact_trace` marks spectra normalized in exact arithmetic, whose
// 1 - trace is rounding noise rather than signal.
OptimalZeta optimize_diagonal(const std::vector<double>& joint, std::uint64_t edim,
                              std::uint64_t rdim, bool exact_trace) {
  std::vector<double> ref_marginal(static_cast<std::size_t>(rdim), 0.0);
  for (std::uint64_t e = 0; e < edim; ++e) {
    for (std::uint64_t m = 0; m < rdim; ++m) {
      ref_marginal[m] += joint[static_cast<std::size_t>(e * rdim + m)];
    }
  }
  const double tau = 1.0 / static_cast<double>(rdim);
  for (double p : ref_marginal) {
    if (std::abs(p - tau) > tol::kDerived) {
      throw ContractViolation("optimal_diagonal_zeta: reference marginal is not uniform");
    }
  }
  OptimalZeta out;
  out.weights.resize(static_cast<std::size_t>(edim));
  double norm = 0.0;
  double gap = 0.0;
  double trace = 0.0;
  std::vector<double> roots(static_cast<std::size_t>(rdim));
  for (std::uint64_t e = 0; e < edim; ++e) {
    double c = 0.0;
    for (std::uint64_t m = 0; m < rdim; ++m) {
      const double r = std::max(0.0, joint[static_cast<std::size_t>(e * rdim + m)]);
      roots[m] = std::sqrt(r);
      c += roots[m] * std::sqrt(tau);
      trace += r;
    }
    for (std::uint64_t m = 0; m < rdim; ++m) {
      for (std::uint64_t mp = m + 1; mp < rdim; ++mp) {
        gap += (roots[m] - roots[mp]) * (roots[m] - roots[mp]);
      }
    }
    out.weights[e] = c * c;
    norm += c * c;
  }
  for (double& w : out.weights) w /= norm;
  out.fidelity = std::min(1.0, std::sqrt(norm));
  double one_minus_f2 = gap * tau;
  if (!exact_trace) one_minus_f2 += std::max(0.0, 1.0 - trace);
  out.purified = std::sqrt(one_minus_f2);
  return out;
}

std::uint64_t ancilla_free_dim(int qubits) { return std::uint64_t{1} << qubits; }

}  // namespace

std::string_view to_string(ZetaKind kind) {
  switch (kind) {
    case ZetaKind::kMarginal: return "marginal";
    case ZetaKind::kOptimalDiagonal: return "optimal_diagonal";
    case ZetaKind::kCustom: return "custom";
  }
  return "unknown";
}

DensityOperator avg_environment_state(const SpectrumTable& spectrum) {
  const auto diag = spectrum_diagonal(spectrum);
  return DensityOperator::diagonal(diag);
}

DensityOperator marginal_zeta(int n, int k, int t, int alpha) {
  const auto b = betas(n, k, t, alpha);
  const std::uint64_t edim = ancilla_free_dim(t);
  std::vector<double> diag(static_cast<std::size_t>(edim));
  for (std::uint64_t e = 0; e < edim; ++e) diag[e] = b[static_cast<std::size_t>(hamming_weight(e))];
  return DensityOperator::diagonal(diag);
}

DensityOperator averaged_output(const CodeParams& params, const PureState& input) {
  params.validate();
  const int n = params.n;
  const int t = params.t;
  const int r = input.num_qubits() - n;
  if (r < 0) throw ContractViolation("averaged_output: input has fewer than n qubits");
  const std::vector<int> a_rows = [&] {
    std::vector<int> rows(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) rows[static_cast<std::size_t>(q)] = q;
    return rows;
  }();
  // Row a (physical basis state), column reference basis state.
  const CMatrix amps = amplitude_matrix(input.amplitudes(), input.num_qubits(), a_rows);
  const auto rdim = static_cast<Eigen::Index>(std::uint64_t{1} << r);

  std::vector<CMatrix> sector_ref(static_cast<std::size_t>(n + 1), CMatrix::Zero(rdim, rdim));
  for (Eigen::Index a = 0; a < amps.rows(); ++a) {
    const auto row = amps.row(a);
    sector_ref[static_cast<std::size_t>(hamming_weight(static_cast<std::uint64_t>(a)))] +=
        row.transpose() * row.conjugate();
  }

  const auto edim = static_cast<Eigen::Index>(std::uint64_t{1} << t);
  std::vector<CMatrix> by_erased_weight(static_cast<std::size_t>(t + 1), CMatrix::Zero(rdim, rdim));
  for (int i = 0; i <= t; ++i) {
    for (int j = i; j <= n - t + i; ++j) {
      const double ratio = binomial_ratio(n - t, j - i, n, j);
      if (ratio == 0.0) continue;
      by_erased_weight[static_cast<std::size_t>(i)] += ratio * sector_ref[static_cast<std::size_t>(j)];
    }
  }
  CMatrix out = CMatrix::Zero(edim * rdim, edim * rdim);
  for (Eigen::Index e = 0; e < edim; ++e) {
    out.block(e * rdim, e * rdim, rdim, rdim) =
        by_erased_weight[static_cast<std::size_t>(hamming_weight(static_cast<std::uint64_t>(e)))];
  }
  out = 0.5 * (out + out.adjoint()).eval();
  return DensityOperator(std::move(out));
}

double decoupling_deviation(const BlockUnitary& unitary, const CodeParams& params,
                            const PureState& input) {
  params.validate();
  if (unitary.num_qubits() != params.n) throw ContractViolation("decoupling_deviation: size mismatch");
  const int r = input.num_qubits() - params.n;
  if (r < 0) throw ContractViolation("decoupling_deviation: input has fewer than n qubits");
  const PureState rotated = PureState::normalized(unitary.apply(input.amplitudes(), r));
  std::vector<int> keep = params.erased;
  for (int q = 0; q < r; ++q) keep.push_back(params.n + q);
  const DensityOperator actual = partial_trace(rotated, keep);
  const DensityOperator average = averaged_output(params, input);
  return trace_norm(actual.matrix() - average.matrix());
}

ChoiErrorReport choi_error_upper(const BlockUnitary& unitary, const CodeParams& params,
                                 const ZetaChoice& zeta) {
  params.validate();
  if (unitary.num_qubits() != params.n) throw ContractViolation("choi_error_upper: size mismatch");
  ChoiErrorReport report;
  report.zeta_used = zeta.kind;
  if (zeta.kind == ZetaKind::kCustom) {
    if (!zeta.custom) throw ContractViolation("choi_error_upper: custom zeta missing");
    if (zeta.custom->num_qubits() != params.t) {
      throw ContractViolation("choi_error_upper: custom zeta must act on the t erased qubits");
    }
  }
  if (params.t == 0) return report;

  const EncodedState encoded = encode(unitary, maximally_entangled(params.k), params);
  const DensityOperator output = complementary_output(encoded);
  const SpectrumTable spectrum = phi_avg_reduced(params.n, params.k, params.t, params.alpha);
  const auto avg_diag = spectrum_diagonal(spectrum);

  CMatrix diff = output.matrix();
  for (std::size_t i = 0; i < avg_diag.size(); ++i) {
    diff(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) -= avg_diag[i];
  }
  report.deviation_term = std::sqrt(2.0 * trace_norm(diff));

  switch (zeta.kind) {
    case ZetaKind::kMarginal:
      report.avg_state_term = choi_fidelity_closed(params.n, params.k, params.t, params.alpha).purified;
      break;
    case ZetaKind::kOptimalDiagonal: {
      report.avg_state_term = optimal_diagonal_zeta(spectrum, std::uint64_t{1} << params.k).purified;
      break;
    }
    case ZetaKind::kCustom: {
      const auto rdim = static_cast<Eigen::Index>(std::uint64_t{1} << params.k);
      const CMatrix product = kron(
          zeta.custom->matrix(), CMatrix::Identity(rdim, rdim) / static_cast<double>(rdim));
      report.avg_state_term =
          purified_distance(DensityOperator::diagonal(avg_diag), DensityOperator(product));
      break;
    }
  }
  report.total_upper = report.deviation_term + report.avg_state_term;
  return report;
}

WorstCaseReport worst_case_error_upper(const BlockUnitary& unitary, const CodeParams& params,
                                       const DensityOperator& zeta) {
  params.validate();
  if (params.k > 4) throw ContractViolation("worst_case_error_upper: k above 4");
  if (zeta.num_qubits() != params.t) {
    throw ContractViolation("worst_case_error_upper: zeta must act on the t erased qubits");
  }
  WorstCaseReport report;
  if (params.t == 0) return report;
  const auto vectors = encoded_basis(unitary, params);
  for (std::size_t x = 0; x < vectors.size(); ++x) {
    CMatrix diag_block = rho_from_encoded(vectors[x], vectors[x], params);
    diag_block = 0.5 * (diag_block + diag_block.adjoint()).eval();
    report.eps_diag = std::max(report.eps_diag, purified_distance(DensityOperator(diag_block), zeta));
    for (std::size_t xp = x + 1; xp < vectors.size(); ++xp) {
      report.eps_offdiag =
          std::max(report.eps_offdiag, trace_norm(rho_from_encoded(vectors[x], vectors[xp], params)));
    }
  }
  report.upper = report.eps_diag +
                 static_cast<double>(std::uint64_t{1} << params.k) * std::sqrt(report.eps_offdiag);
  return report;
}

OptimalZeta optimal_diagonal_zeta(const SpectrumTable& spectrum, std::uint64_t reference_dim) {
  if (reference_dim != (std::uint64_t{1} << spectrum.k)) {
    throw ContractViolation("optimal_diagonal_zeta: reference dimension must be 2^k");
  }
  if (spectrum.entries.size() !=
      static_cast<std::size_t>((spectrum.k + 1) * (spectrum.t + 1))) {
    throw ContractViolation("optimal_diagonal_zeta: malformed spectrum table");
  }
  return optimize_diagonal(spectrum_diagonal(spectrum), std::uint64_t{1} << spectrum.t,
                           reference_dim, true);
}

OptimalZeta optimal_diagonal_zeta(const CMatrix& joint, int e_qubits, int r_qubits) {
  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << (e_qubits + r_qubits));
  if (e_qubits < 0 || r_qubits < 0 || joint.rows() != dim || joint.cols() != dim) {
    throw ContractViolation("optimal_diagonal_zeta: operator is not 2^(e+r) square");
  }
  const CMatrix off = joint - CMatrix(joint.diagonal().asDiagonal());
  if (off.cwiseAbs().maxCoeff() > tol::kStructural) {
    throw ContractViolation("optimal_diagonal_zeta: joint operator is not diagonal");
  }
  std::vector<double> diag(static_cast<std::size_t>(dim));
  for (Eigen::Index i = 0; i < dim; ++i) diag[static_cast<std::size_t>(i)] = joint(i, i).real();
  return optimize_diagonal(diag, std::uint64_t{1} << e_qubits, std::uint64_t{1} << r_qubits, false);
}

double marginal_zeta_fidelity(const SpectrumTable& spectrum) {
  return choi_fidelity_closed(spectrum.n, spectrum.k, spectrum.t, spectrum.alpha).fidelity;
}

}  // namespace covcode
