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

// Hamming-weight sector structure of n qubits and charge-conserving
// unitaries stored block by block.

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "covcode/qstate.hpp"

namespace covcode {

/// Basis states of n qubits grouped by Hamming weight. Within a sector the
/// indices are in increasing integer order.
class SectorDecomposition {
 public:
  int n() const { return n_; }
  int num_sectors() const { return n_ + 1; }
  std::span<const std::uint32_t> sector(int j) const;
  std::size_t dim(int j) const { return sector(j).size(); }
  std::vector<std::size_t> dims() const;
  std::uint64_t total_dim() const { return std::uint64_t{1} << n_; }

  /// Position of `index` inside its own sector.
  std::uint32_t position_of(std::uint64_t index) const {
    return positions_[static_cast<std::size_t>(index)];
  }

 private:
  friend SectorDecomposition hamming_sectors(int n);
  int n_ = 0;
  std::vector<std::vector<std::uint32_t>> sectors_;
  std::vector<std::uint32_t> positions_;
};

/// Sector structure for 1 <= n <= 20; ConfigError outside that range.
SectorDecomposition hamming_sectors(int n);

int hamming_weight(std::uint64_t index);

/// A unitary commuting with the Hamming weight operator, stored as one dense
/// block per weight sector. Block structure makes [U, Q] = 0 exact. Blocks
/// are immutable and shared between copies.
class BlockUnitary {
 public:
  /// Checks each block is square, sized C(n, j) and unitary within 1e-10.
  BlockUnitary(std::shared_ptr<const SectorDecomposition> decomposition,
               std::vector<CMatrix> blocks);

  static BlockUnitary identity(std::shared_ptr<const SectorDecomposition> decomposition);

  const SectorDecomposition& decomposition() const { return *decomposition_; }
  std::shared_ptr<const SectorDecomposition> shared_decomposition() const {
    return decomposition_;
  }
  int num_qubits() const { return decomposition_->n(); }
  const CMatrix& block(int j) const;

  /// (U (x) I) |state>, where the first n qubits of `state` are acted on and
  /// the trailing `extra_qubits` are spectators.
  CVector apply(const CVector& state, int extra_qubits = 0) const;

  /// Full 2^n x 2^n matrix; n <= 12.
  CMatrix to_dense() const;

 private:
  std::shared_ptr<const SectorDecomposition> decomposition_;
  std::shared_ptr<const std::vector<CMatrix>> blocks_;
};

/// Independent Haar block per sector (Ginibre + QR with diagonal-phase
/// correction). Deterministic in `seed`; sector j uses stream j of the seed.
BlockUnitary sample_block_haar(std::shared_ptr<const SectorDecomposition> decomposition,
                               std::uint64_t seed);

/// Dense projector onto the weight-j sector; n <= 12.
CMatrix weight_projector(const SectorDecomposition& decomposition, int j);

/// C(m,i)^{-1/2} sum_{|v|=i} |v>|v> on 2m qubits (first copy leading).
PureState dicke_entangled_state(int m, int i);

enum class AncillaKind { kBasis, kDicke };

/// Weight-alpha eigenstate on m qubits: either 1^alpha 0^{m-alpha} or the
/// uniform superposition of weight-alpha strings.
PureState ancilla_state(int m, int alpha, AncillaKind kind = AncillaKind::kBasis);

/// <psi| Q^(m) |psi>.
double hamming_weight_expectation(const PureState& psi);

}  // namespace covcode
