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

#include "covcode/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "covcode/errors.hpp"

namespace covcode {
namespace {

int require_qubits(std::size_t dim, const char* what) {
  int m = qubits_for_dim(dim);
  if (m < 0) {
    std::ostringstream os;
    os << what << ": dimension " << dim << " is not a power of two";
    throw ContractViolation(os.str());
  }
  return m;
}

void validate_keep(int num_qubits, std::span<const int> keep) {
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= num_qubits) {
      throw ContractViolation("partial_trace: qubit index " + std::to_string(keep[i]) +
                              " out of range for " + std::to_string(num_qubits) + " qubits");
    }
    if (i > 0 && keep[i] <= keep[i - 1]) {
      throw ContractViolation("partial_trace: keep must be sorted and distinct");
    }
  }
}

// Basis-index offsets contributed by every assignment of the given qubits.
std::vector<std::uint64_t> offsets(int num_qubits, std::span<const int> qubits) {
  const std::size_t count = std::size_t{1} << qubits.size();
  std::vector<std::uint64_t> out(count, 0);
  const int q = static_cast<int>(qubits.size());
  for (std::size_t v = 0; v < count; ++v) {
    std::uint64_t off = 0;
    for (int b = 0; b < q; ++b) {
      // Bit b of v (counted from the most significant of the q-bit word)
      // lands on qubit qubits[b].
      if ((v >> (q - 1 - b)) & 1u) off |= std::uint64_t{1} << (num_qubits - 1 - qubits[b]);
    }
    out[v] = off;
  }
  return out;
}

CMatrix slice_matrix(const CVector& amps, int num_qubits, std::span<const int> keep) {
  auto traced = complement_qubits(num_qubits, keep);
  auto ko = offsets(num_qubits, keep);
  auto to = offsets(num_qubits, traced);
  CMatrix m(static_cast<Eigen::Index>(ko.size()), static_cast<Eigen::Index>(to.size()));
  for (std::size_t c = 0; c < to.size(); ++c) {
    for (std::size_t a = 0; a < ko.size(); ++a) {
      m(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(c)) =
          amps[static_cast<Eigen::Index>(ko[a] | to[c])];
    }
  }
  return m;
}

}  // namespace

int qubits_for_dim(std::size_t dim) {
  if (dim == 0 || (dim & (dim - 1)) != 0) return -1;
  int m = 0;
  while ((std::size_t{1} << m) < dim) ++m;
  return m;
}

PureState::PureState(CVector amplitudes) : amplitudes_(std::move(amplitudes)) {
  num_qubits_ = require_qubits(static_cast<std::size_t>(amplitudes_.size()), "PureState");
  double norm2 = amplitudes_.squaredNorm();
  if (std::abs(norm2 - 1.0) > tol::kStructural) {
    std::ostringstream os;
    os << "PureState: squared norm " << norm2 << " differs from 1";
    throw ContractViolation(os.str());
  }
}

PureState PureState::normalized(CVector amplitudes) {
  double nrm = amplitudes.norm();
  if (nrm == 0.0) throw ContractViolation("PureState::normalized: zero vector");
  amplitudes /= nrm;
  return PureState(std::move(amplitudes));
}

PureState PureState::basis(int num_qubits, std::uint64_t index) {
  if (num_qubits < 0 || num_qubits > 30) throw ContractViolation("PureState::basis: bad qubit count");
  const std::uint64_t dim = std::uint64_t{1} << num_qubits;
  if (index >= dim) throw ContractViolation("PureState::basis: index out of range");
  CVector v = CVector::Zero(static_cast<Eigen::Index>(dim));
  v[static_cast<Eigen::Index>(index)] = 1.0;
  return PureState(std::move(v));
}

DensityOperator::DensityOperator(CMatrix matrix, Normalization norm)
    : matrix_(std::move(matrix)), norm_(norm) {
  if (matrix_.rows() != matrix_.cols()) throw ContractViolation("DensityOperator: matrix is not square");
  num_qubits_ = require_qubits(static_cast<std::size_t>(matrix_.rows()), "DensityOperator");
  double herm = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tol::kStructural) {
    std::ostringstream os;
    os << "DensityOperator: not Hermitian (max deviation " << herm << ")";
    throw ContractViolation(os.str());
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(matrix_, Eigen::EigenvaluesOnly);
  double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -tol::kStructural) {
    std::ostringstream os;
    os << "DensityOperator: eigenvalue " << min_eig << " is negative";
    throw ContractViolation(os.str());
  }
  double tr = matrix_.trace().real();
  bool ok = norm_ == Normalization::kTraceOne ? std::abs(tr - 1.0) <= tol::kStructural
                                              : tr <= 1.0 + tol::kStructural;
  if (!ok) {
    std::ostringstream os;
    os << "DensityOperator: trace " << tr << " violates the normalization";
    throw ContractViolation(os.str());
  }
}

DensityOperator DensityOperator::from_pure(const PureState& psi) {
  return DensityOperator(psi.projector());
}

DensityOperator DensityOperator::diagonal(std::span<const double> probabilities) {
  CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(probabilities.size()),
                            static_cast<Eigen::Index>(probabilities.size()));
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = probabilities[i];
  }
  return DensityOperator(std::move(m));
}

DensityOperator DensityOperator::maximally_mixed(int num_qubits) {
  const auto d = Eigen::Index{1} << num_qubits;
  return DensityOperator(CMatrix::Identity(d, d) / static_cast<double>(d));
}

CMatrix psd_sqrt(const CMatrix& a) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(a);
  Eigen::VectorXd ev = es.eigenvalues();
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev[i] < -tol::kStructural) throw ContractViolation("psd_sqrt: matrix is not PSD");
    ev[i] = std::sqrt(std::max(ev[i], 0.0));
  }
  return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

double fidelity_psd(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ContractViolation("fidelity: dimension mismatch");
  }
  CMatrix sa = psd_sqrt(a);
  CMatrix m = sa * b * sa;
  m = (0.5 * (m + m.adjoint())).eval();
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m, Eigen::EigenvaluesOnly);
  double f = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    f += std::sqrt(std::max(es.eigenvalues()[i], 0.0));
  }
  return f;
}

double fidelity(const DensityOperator& rho, const DensityOperator& sigma) {
  if (rho.dim() != sigma.dim()) throw ContractViolation("fidelity: dimension mismatch");
  return std::clamp(fidelity_psd(rho.matrix(), sigma.matrix()), 0.0, 1.0);
}

double purified_distance(const DensityOperator& rho, const DensityOperator& sigma) {
  double f = fidelity(rho, sigma);
  return std::sqrt(std::max(0.0, 1.0 - f * f));
}

double trace_norm(const CMatrix& a) {
  if (a.rows() != a.cols()) throw ContractViolation("trace_norm: matrix is not square");
  if (a.size() == 0) return 0.0;
  Eigen::BDCSVD<CMatrix> svd(a);
  return svd.singularValues().sum();
}

double pure_trace_distance(const CVector& psi, const CVector& phi) {
  if (psi.size() != phi.size()) throw ContractViolation("pure_trace_distance: dimension mismatch");
  Complex overlap = psi.dot(phi);  // <psi|phi>
  return 2.0 * (phi - overlap * psi).norm();
}

CMatrix amplitude_matrix(const CVector& amps, int num_qubits, std::span<const int> rows) {
  if (qubits_for_dim(static_cast<std::size_t>(amps.size())) != num_qubits) {
    throw ContractViolation("amplitude_matrix: dimension mismatch");
  }
  validate_keep(num_qubits, rows);
  return slice_matrix(amps, num_qubits, rows);
}

std::vector<int> complement_qubits(int num_qubits, std::span<const int> keep) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(num_qubits));
  for (int q = 0; q < num_qubits; ++q) {
    if (std::find(keep.begin(), keep.end(), q) == keep.end()) out.push_back(q);
  }
  return out;
}

CMatrix reduced_cross(const CVector& a, const CVector& b, int num_qubits,
                      std::span<const int> keep) {
  if (a.size() != b.size() || qubits_for_dim(static_cast<std::size_t>(a.size())) != num_qubits) {
    throw ContractViolation("reduced_cross: dimension mismatch");
  }
  validate_keep(num_qubits, keep);
  CMatrix ma = slice_matrix(a, num_qubits, keep);
  CMatrix mb = slice_matrix(b, num_qubits, keep);
  return ma * mb.adjoint();
}

DensityOperator partial_trace(const PureState& psi, std::span<const int> keep) {
  validate_keep(psi.num_qubits(), keep);
  CMatrix m = slice_matrix(psi.amplitudes(), psi.num_qubits(), keep);
  CMatrix rho = m * m.adjoint();
  rho = (0.5 * (rho + rho.adjoint())).eval();
  return DensityOperator(std::move(rho));
}

DensityOperator partial_trace(const DensityOperator& rho, std::span<const int> keep) {
  const int m = rho.num_qubits();
  validate_keep(m, keep);
  auto traced = complement_qubits(m, keep);
  auto ko = offsets(m, keep);
  auto to = offsets(m, traced);
  const auto kd = static_cast<Eigen::Index>(ko.size());
  CMatrix out = CMatrix::Zero(kd, kd);
  const CMatrix& src = rho.matrix();
  for (Eigen::Index a = 0; a < kd; ++a) {
    for (Eigen::Index b = 0; b < kd; ++b) {
      Complex acc = 0.0;
      for (auto c : to) {
        acc += src(static_cast<Eigen::Index>(ko[static_cast<std::size_t>(a)] | c),
                   static_cast<Eigen::Index>(ko[static_cast<std::size_t>(b)] | c));
      }
      out(a, b) = acc;
    }
  }
  return DensityOperator(std::move(out), rho.subnormalized() ? Normalization::kSubnormalized
                                                             : Normalization::kTraceOne);
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace covcode
