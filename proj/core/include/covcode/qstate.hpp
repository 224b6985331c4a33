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

// Dense complex states on a handful of qubits.
//
// Qubit ordering: qubit 0 is the most significant bit of the
// computational-basis index. Composite registers are laid out left to right,
// so for A (n qubits) followed by R (r qubits) the basis index is a * 2^r + r.

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace covcode {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Normalized state vector on `num_qubits` qubits.
class PureState {
 public:
  /// Validates length (power of two) and norm (within 1e-10).
  explicit PureState(CVector amplitudes);

  /// Rescales `amplitudes` to unit norm before validating.
  static PureState normalized(CVector amplitudes);
  static PureState basis(int num_qubits, std::uint64_t index);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const CVector& amplitudes() const { return amplitudes_; }
  Complex operator[](std::size_t i) const { return amplitudes_[static_cast<Eigen::Index>(i)]; }

  CMatrix projector() const { return amplitudes_ * amplitudes_.adjoint(); }

 private:
  CVector amplitudes_;
  int num_qubits_ = 0;
};

enum class Normalization {
  kTraceOne,
  /// Trace <= 1; used for blocks of a larger state.
  kSubnormalized,
};

/// Hermitian PSD matrix of dimension 2^m. Construction checks hermiticity,
/// eigenvalues >= -1e-10 and the trace condition.
class DensityOperator {
 public:
  explicit DensityOperator(CMatrix matrix, Normalization norm = Normalization::kTraceOne);

  static DensityOperator from_pure(const PureState& psi);
  static DensityOperator diagonal(std::span<const double> probabilities);
  static DensityOperator maximally_mixed(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  const CMatrix& matrix() const { return matrix_; }
  bool subnormalized() const { return norm_ == Normalization::kSubnormalized; }
  double trace() const { return matrix_.trace().real(); }

 private:
  CMatrix matrix_;
  int num_qubits_ = 0;
  Normalization norm_;
};

/// Returns log2(dim) if dim is a power of two, else -1.
int qubits_for_dim(std::size_t dim);

/// Uhlmann fidelity ||sqrt(rho) sqrt(sigma)||_1, clamped to [0, 1].
double fidelity(const DensityOperator& rho, const DensityOperator& sigma);

/// sqrt(1 - F^2).
double purified_distance(const DensityOperator& rho, const DensityOperator& sigma);

/// ||sqrt(a) sqrt(b)||_1 for arbitrary PSD matrices (no trace condition).
double fidelity_psd(const CMatrix& a, const CMatrix& b);

/// Sum of singular values.
double trace_norm(const CMatrix& a);

/// Principal square root of a Hermitian PSD matrix. Eigenvalues in
/// [-1e-10, 0) are clipped to zero; anything more negative is rejected.
CMatrix psd_sqrt(const CMatrix& a);

/// ||psi psi^dag - phi phi^dag||_1 for unit vectors, evaluated as twice the
/// norm of the component of phi orthogonal to psi (no 1 - |<psi|phi>|^2
/// cancellation).
double pure_trace_distance(const CVector& psi, const CVector& phi);

/// Reduced operator on `keep` (sorted, distinct qubit indices). Kept qubits
/// retain their relative order. Pure input is reduced as a Gram matrix of
/// amplitude slices without forming the full projector.
DensityOperator partial_trace(const PureState& psi, std::span<const int> keep);
DensityOperator partial_trace(const DensityOperator& rho, std::span<const int> keep);

/// Tr_{rest} |a><b| on `num_qubits` qubits. Not Hermitian in general.
CMatrix reduced_cross(const CVector& a, const CVector& b, int num_qubits,
                      std::span<const int> keep);

/// Amplitudes reshaped into a (2^|rows| x 2^{m-|rows|}) matrix whose row
/// index enumerates the qubits in `rows` and column index the rest.
CMatrix amplitude_matrix(const CVector& amps, int num_qubits, std::span<const int> rows);

/// a (x) b.
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Complement of `keep` in {0..num_qubits-1}, increasing order.
std::vector<int> complement_qubits(int num_qubits, std::span<const int> keep);

}  // namespace covcode
