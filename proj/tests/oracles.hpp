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

// Independent reference implementations used by the tests. Nothing here
// calls the library's closed forms: binomials are exact integers, sums are
// carried out in 50-digit decimal floating point, and averaged states are
// built from dense projectors with a naive partial trace.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "covcode/qstate.hpp"

namespace covcode::oracle {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;
using Real = boost::multiprecision::cpp_dec_float_50;

inline cpp_int binom(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  cpp_int acc = 1;
  for (long long i = 0; i < k; ++i) acc = acc * (n - i) / (i + 1);
  return acc;
}

inline cpp_int pow2(int k) { return cpp_int(1) << k; }

inline Real to_real(const cpp_rational& q) {
  return Real(boost::multiprecision::numerator(q)) / Real(boost::multiprecision::denominator(q));
}

inline Real to_real(const cpp_int& q) { return Real(q); }

/// 2^{-k} C(n-t, j+alpha-i) / C(n, j+alpha)
inline cpp_rational eigenvalue(int n, int k, int t, int alpha, int j, int i) {
  return cpp_rational(binom(n - t, j + alpha - i), pow2(k) * binom(n, j + alpha));
}

/// Weight of one weight-i basis state of E in the E-marginal.
inline cpp_rational beta(int n, int k, int t, int alpha, int i) {
  cpp_rational acc = 0;
  for (int j = 0; j <= k; ++j) acc += binom(k, j) * eigenvalue(n, k, t, alpha, j, i);
  return acc;
}

inline cpp_rational spectrum_trace(int n, int k, int t, int alpha) {
  cpp_rational acc = 0;
  for (int j = 0; j <= k; ++j) {
    for (int i = 0; i <= t; ++i) acc += binom(k, j) * binom(t, i) * eigenvalue(n, k, t, alpha, j, i);
  }
  return acc;
}

/// sum_{j,i} mult sqrt(p q) with q = 2^{-k} beta_i.
inline Real choi_fidelity(int n, int k, int t, int alpha) {
  Real acc = 0;
  for (int j = 0; j <= k; ++j) {
    for (int i = 0; i <= t; ++i) {
      const Real p = to_real(eigenvalue(n, k, t, alpha, j, i));
      const Real q = to_real(beta(n, k, t, alpha, i)) / to_real(pow2(k));
      acc += to_real(binom(k, j) * binom(t, i)) * sqrt(p * q);
    }
  }
  return acc;
}

inline Real purified(const Real& fidelity) { return sqrt(Real(1) - fidelity * fidelity); }

inline Real choi_one_norm(int n, int k, int t, int alpha) {
  Real acc = 0;
  for (int j = 0; j <= k; ++j) {
    for (int i = 0; i <= t; ++i) {
      const Real p = to_real(eigenvalue(n, k, t, alpha, j, i));
      const Real q = to_real(beta(n, k, t, alpha, i)) / to_real(pow2(k));
      acc += to_real(binom(k, j) * binom(t, i)) * abs(p - q);
    }
  }
  return acc;
}

/// F(rho^{x,x}_avg, zeta_0) for |x| = wx.
inline Real worst_fidelity(int n, int k, int t, int alpha, int wx) {
  Real acc = 0;
  for (int i = 0; i <= t; ++i) {
    const Real r = to_real(cpp_rational(binom(n - t, wx + alpha - i), binom(n, wx + alpha)));
    acc += to_real(binom(t, i)) * sqrt(r * to_real(beta(n, k, t, alpha, i)));
  }
  return acc;
}

/// Sum over the (i, j) grid with i the weight on the n - t unerased qubits,
/// so i <= n - t; j is not trimmed.
inline Real kappa(int n, int k, int t, int alpha, bool physical_range = true) {
  Real total = 0;
  for (int i = 0; i <= (physical_range ? n - t : n); ++i) {
    Real inner = 0;
    for (int j = 0; j <= n; ++j) {
      const cpp_int c = binom(t, j - i) * binom(k, j - alpha);
      if (c == 0) continue;
      inner += to_real(c) / sqrt(to_real(pow2(k) * binom(n, j)));
    }
    total += inner * inner;
  }
  return total;
}

inline Real chi(int n, int t, int alpha, int wx, int wxp) {
  const Real c = to_real(binom(2 * t, t));
  const Real a = to_real(binom(n, wx + alpha));
  const Real b = to_real(binom(n, wxp + alpha));
  return c / a + c / b + 2 * to_real(binom(2 * t, t + wx - wxp)) / sqrt(a * b);
}

/// Naive reduction of a dense operator on m qubits onto `keep` (sorted).
inline CMatrix naive_partial_trace(const CMatrix& rho, int m, const std::vector<int>& keep) {
  std::vector<int> rest;
  for (int q = 0; q < m; ++q) {
    if (std::find(keep.begin(), keep.end(), q) == keep.end()) rest.push_back(q);
  }
  auto compose = [&](std::uint64_t kept, std::uint64_t traced) {
    std::uint64_t idx = 0;
    for (std::size_t a = 0; a < keep.size(); ++a) {
      const std::uint64_t bit = (kept >> (keep.size() - 1 - a)) & 1U;
      idx |= bit << (m - 1 - keep[a]);
    }
    for (std::size_t a = 0; a < rest.size(); ++a) {
      const std::uint64_t bit = (traced >> (rest.size() - 1 - a)) & 1U;
      idx |= bit << (m - 1 - rest[a]);
    }
    return static_cast<Eigen::Index>(idx);
  };
  const std::uint64_t kd = std::uint64_t{1} << keep.size();
  const std::uint64_t rd = std::uint64_t{1} << rest.size();
  CMatrix out = CMatrix::Zero(static_cast<Eigen::Index>(kd), static_cast<Eigen::Index>(kd));
  for (std::uint64_t a = 0; a < kd; ++a) {
    for (std::uint64_t b = 0; b < kd; ++b) {
      Complex acc = 0.0;
      for (std::uint64_t r = 0; r < rd; ++r) acc += rho(compose(a, r), compose(b, r));
      out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = acc;
    }
  }
  return out;
}

inline int popcount(std::uint64_t x) {
  int c = 0;
  for (; x; x &= x - 1) ++c;
  return c;
}

/// Block-Haar average of the encoded maximally entangled state, reduced to
/// the last t physical qubits and R. Built as
/// sum_j Pi_j / C(n,j) (x) Tr_A[Pi_j Psi Pi_j] on dense matrices.
inline CMatrix dense_avg_environment(int n, int k, int t, int alpha) {
  const std::uint64_t pdim = std::uint64_t{1} << n;
  const std::uint64_t rdim = std::uint64_t{1} << k;
  const auto total = static_cast<Eigen::Index>(pdim * rdim);
  CVector psi = CVector::Zero(total);
  const std::uint64_t ancilla = ((std::uint64_t{1} << alpha) - 1) << (n - k - alpha);
  for (std::uint64_t x = 0; x < rdim; ++x) {
    const std::uint64_t a = (x << (n - k)) | ancilla;
    psi[static_cast<Eigen::Index>(a * rdim + x)] = 1.0 / std::sqrt(static_cast<double>(rdim));
  }
  const CMatrix rho = psi * psi.adjoint();
  CMatrix avg = CMatrix::Zero(total, total);
  for (int j = 0; j <= n; ++j) {
    CMatrix ref = CMatrix::Zero(static_cast<Eigen::Index>(rdim), static_cast<Eigen::Index>(rdim));
    double dim = 0.0;
    for (std::uint64_t a = 0; a < pdim; ++a) {
      if (popcount(a) != j) continue;
      dim += 1.0;
      ref += rho.block(static_cast<Eigen::Index>(a * rdim), static_cast<Eigen::Index>(a * rdim),
                       static_cast<Eigen::Index>(rdim), static_cast<Eigen::Index>(rdim));
    }
    for (std::uint64_t a = 0; a < pdim; ++a) {
      if (popcount(a) != j) continue;
      avg.block(static_cast<Eigen::Index>(a * rdim), static_cast<Eigen::Index>(a * rdim),
                static_cast<Eigen::Index>(rdim), static_cast<Eigen::Index>(rdim)) += ref / dim;
    }
  }
  std::vector<int> keep;
  for (int q = n - t; q < n + k; ++q) keep.push_back(q);
  return naive_partial_trace(avg, n + k, keep);
}

inline CVector random_vector(Eigen::Index dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CVector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v[i] = Complex(g(rng), g(rng));
  return v.normalized();
}

inline PureState random_pure(int qubits, std::mt19937_64& rng) {
  return PureState::normalized(random_vector(Eigen::Index{1} << qubits, rng));
}

/// Mixed state with a random spectrum of full rank (Ginibre G G^dag / Tr).
inline DensityOperator random_density(int qubits, std::mt19937_64& rng) {
  const auto dim = Eigen::Index{1} << qubits;
  std::normal_distribution<double> g;
  CMatrix m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) m(i, j) = Complex(g(rng), g(rng));
  }
  CMatrix rho = m * m.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityOperator(rho);
}

}  // namespace covcode::oracle
