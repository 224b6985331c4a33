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

#include "covcode/sectors.hpp"

#include <bit>
#include <cmath>
#include <sstream>

#include "covcode/errors.hpp"
#include "covcode/random.hpp"

namespace covcode {

int hamming_weight(std::uint64_t index) { return std::popcount(index); }

std::span<const std::uint32_t> SectorDecomposition::sector(int j) const {
  if (j < 0 || j > n_) {
    throw ContractViolation("sector weight " + std::to_string(j) + " out of range 0.." +
                            std::to_string(n_));
  }
  return sectors_[static_cast<std::size_t>(j)];
}

std::vector<std::size_t> SectorDecomposition::dims() const {
  std::vector<std::size_t> out;
  out.reserve(sectors_.size());
  for (const auto& s : sectors_) out.push_back(s.size());
  return out;
}

SectorDecomposition hamming_sectors(int n) {
  if (n < 1 || n > 20) {
    throw ConfigError("hamming_sectors: n = " + std::to_string(n) + " outside 1..20");
  }
  SectorDecomposition d;
  d.n_ = n;
  d.sectors_.assign(static_cast<std::size_t>(n) + 1, {});
  const std::uint64_t total = std::uint64_t{1} << n;
  d.positions_.resize(static_cast<std::size_t>(total));
  for (std::uint64_t x = 0; x < total; ++x) {
    auto& s = d.sectors_[static_cast<std::size_t>(hamming_weight(x))];
    d.positions_[static_cast<std::size_t>(x)] = static_cast<std::uint32_t>(s.size());
    s.push_back(static_cast<std::uint32_t>(x));
  }
  return d;
}

BlockUnitary::BlockUnitary(std::shared_ptr<const SectorDecomposition> decomposition,
                           std::vector<CMatrix> blocks)
    : decomposition_(std::move(decomposition)),
      blocks_(std::make_shared<const std::vector<CMatrix>>(std::move(blocks))) {
  if (!decomposition_) throw ContractViolation("BlockUnitary: null decomposition");
  if (static_cast<int>(blocks_->size()) != decomposition_->num_sectors()) {
    throw ContractViolation("BlockUnitary: one block per sector required");
  }
  for (int j = 0; j < decomposition_->num_sectors(); ++j) {
    const CMatrix& b = (*blocks_)[static_cast<std::size_t>(j)];
    const auto d = static_cast<Eigen::Index>(decomposition_->dim(j));
    if (b.rows() != d || b.cols() != d) {
      throw ContractViolation("BlockUnitary: block " + std::to_string(j) + " has wrong shape");
    }
    double dev = (b.adjoint() * b - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
    if (dev > tol::kStructural) {
      std::ostringstream os;
      os << "BlockUnitary: block " << j << " is not unitary (deviation " << dev << ")";
      throw ContractViolation(os.str());
    }
  }
}

BlockUnitary BlockUnitary::identity(std::shared_ptr<const SectorDecomposition> decomposition) {
  std::vector<CMatrix> blocks;
  for (int j = 0; j < decomposition->num_sectors(); ++j) {
    const auto d = static_cast<Eigen::Index>(decomposition->dim(j));
    blocks.push_back(CMatrix::Identity(d, d));
  }
  return BlockUnitary(std::move(decomposition), std::move(blocks));
}

const CMatrix& BlockUnitary::block(int j) const {
  if (j < 0 || j >= static_cast<int>(blocks_->size())) {
    throw ContractViolation("BlockUnitary::block: weight out of range");
  }
  return (*blocks_)[static_cast<std::size_t>(j)];
}

CVector BlockUnitary::apply(const CVector& state, int extra_qubits) const {
  const int n = num_qubits();
  if (extra_qubits < 0 || qubits_for_dim(static_cast<std::size_t>(state.size())) != n + extra_qubits) {
    throw ContractViolation("BlockUnitary::apply: state size does not match n + extra qubits");
  }
  const Eigen::Index cols = Eigen::Index{1} << extra_qubits;
  CVector out(state.size());
  for (int j = 0; j <= n; ++j) {
    auto idx = decomposition_->sector(j);
    const auto d = static_cast<Eigen::Index>(idx.size());
    CMatrix x(d, cols);
    for (Eigen::Index a = 0; a < d; ++a) {
      const Eigen::Index base = static_cast<Eigen::Index>(idx[static_cast<std::size_t>(a)]) * cols;
      x.row(a) = state.segment(base, cols).transpose();
    }
    if (x.squaredNorm() == 0.0) {
      for (Eigen::Index a = 0; a < d; ++a) {
        out.segment(static_cast<Eigen::Index>(idx[static_cast<std::size_t>(a)]) * cols, cols).setZero();
      }
      continue;
    }
    CMatrix y = (*blocks_)[static_cast<std::size_t>(j)] * x;
    for (Eigen::Index a = 0; a < d; ++a) {
      const Eigen::Index base = static_cast<Eigen::Index>(idx[static_cast<std::size_t>(a)]) * cols;
      out.segment(base, cols) = y.row(a).transpose();
    }
  }
  return out;
}

CMatrix BlockUnitary::to_dense() const {
  const int n = num_qubits();
  if (n > 12) throw ContractViolation("BlockUnitary::to_dense: n > 12");
  const auto dim = static_cast<Eigen::Index>(decomposition_->total_dim());
  CMatrix u = CMatrix::Zero(dim, dim);
  for (int j = 0; j <= n; ++j) {
    auto idx = decomposition_->sector(j);
    const CMatrix& b = (*blocks_)[static_cast<std::size_t>(j)];
    for (std::size_t r = 0; r < idx.size(); ++r) {
      for (std::size_t c = 0; c < idx.size(); ++c) {
        u(idx[r], idx[c]) = b(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
      }
    }
  }
  return u;
}

BlockUnitary sample_block_haar(std::shared_ptr<const SectorDecomposition> decomposition,
                               std::uint64_t seed) {
  if (!decomposition) throw ContractViolation("sample_block_haar: null decomposition");
  std::vector<CMatrix> blocks;
  blocks.reserve(static_cast<std::size_t>(decomposition->num_sectors()));
  for (int j = 0; j < decomposition->num_sectors(); ++j) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(j)));
    blocks.push_back(haar_unitary(static_cast<Eigen::Index>(decomposition->dim(j)), rng));
  }
  return BlockUnitary(std::move(decomposition), std::move(blocks));
}

CMatrix weight_projector(const SectorDecomposition& decomposition, int j) {
  if (decomposition.n() > 12) throw ContractViolation("weight_projector: n > 12");
  auto idx = decomposition.sector(j);
  const auto dim = static_cast<Eigen::Index>(decomposition.total_dim());
  CMatrix p = CMatrix::Zero(dim, dim);
  for (auto x : idx) p(x, x) = 1.0;
  return p;
}

PureState dicke_entangled_state(int m, int i) {
  if (m < 0 || m > 12) throw ContractViolation("dicke_entangled_state: m outside 0..12");
  if (i < 0 || i > m) throw ContractViolation("dicke_entangled_state: weight out of range");
  const std::uint64_t single = std::uint64_t{1} << m;
  CVector v = CVector::Zero(static_cast<Eigen::Index>(single * single));
  for (std::uint64_t x = 0; x < single; ++x) {
    if (hamming_weight(x) == i) v[static_cast<Eigen::Index>((x << m) | x)] = 1.0;
  }
  return PureState::normalized(std::move(v));
}

PureState ancilla_state(int m, int alpha, AncillaKind kind) {
  if (m < 0 || m > 24) throw ContractViolation("ancilla_state: m outside 0..24");
  if (alpha < 0 || alpha > m) {
    throw ContractViolation("ancilla_state: alpha = " + std::to_string(alpha) +
                            " outside 0.." + std::to_string(m));
  }
  if (kind == AncillaKind::kBasis) {
    const std::uint64_t ones = (std::uint64_t{1} << alpha) - 1;
    return PureState::basis(m, ones << (m - alpha));
  }
  const std::uint64_t dim = std::uint64_t{1} << m;
  CVector v = CVector::Zero(static_cast<Eigen::Index>(dim));
  for (std::uint64_t x = 0; x < dim; ++x) {
    if (hamming_weight(x) == alpha) v[static_cast<Eigen::Index>(x)] = 1.0;
  }
  return PureState::normalized(std::move(v));
}

double hamming_weight_expectation(const PureState& psi) {
  double acc = 0.0;
  for (std::size_t x = 0; x < psi.dim(); ++x) {
    acc += std::norm(psi[x]) * hamming_weight(x);
  }
  return acc;
}

}  // namespace covcode
