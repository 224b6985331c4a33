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

#include "covcode/random.hpp"

#include <cmath>

#include "covcode/errors.hpp"

namespace covcode {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t counter) {
  return splitmix64(splitmix64(master) ^ splitmix64(counter * 0xD1B54A32D192ED03ull + 1));
}

CMatrix ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  CMatrix g(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c) {
    for (Eigen::Index r = 0; r < rows; ++r) {
      double re = normal(rng);
      double im = normal(rng);
      g(r, c) = Complex(re, im);
    }
  }
  return g;
}

CMatrix haar_isometry(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  if (cols > rows || cols < 0) throw ContractViolation("haar_isometry: need cols <= rows");
  CMatrix g = ginibre(rows, cols, rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(rows, cols);
  const CMatrix& r = qr.matrixQR();
  for (Eigen::Index i = 0; i < cols; ++i) {
    Complex d = r(i, i);
    double mag = std::abs(d);
    // A zero pivot has probability zero; leave the column untouched.
    if (mag > 0.0) q.col(i) *= d / mag;
  }
  return q;
}

CMatrix haar_unitary(Eigen::Index dim, Rng& rng) { return haar_isometry(dim, dim, rng); }

}  // namespace covcode
