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

#include "covcode/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "covcode/errors.hpp"

namespace covcode {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kLn2 = std::numbers::ln2;

double log_gamma(double x) {
#if defined(__GLIBC__)
  int sign = 0;
  return ::lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

// log(exp(a) + exp(b)) with -inf as the additive identity.
double log_add(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

// ln [C(n-t, m-i) / C(n, m)]: probability weight of one erased basis state
// of weight i inside the weight-m sector.
double log_sector_ratio(int n, int t, int m, int i) {
  double num = log_binomial(n - t, m - i);
  if (num == kNegInf) return kNegInf;
  return num - log_binomial(n, m);
}

double log_beta(int n, int k, int t, int alpha, int i) {
  double acc = kNegInf;
  for (int j = 0; j <= k; ++j) {
    acc = log_add(acc, log_binomial(k, j) + log_sector_ratio(n, t, j + alpha, i));
  }
  return acc - k * kLn2;
}

FidelityDistance from_infidelity(double h) {
  h = std::clamp(h, 0.0, 1.0);
  return {1.0 - h, h, std::sqrt(h * (2.0 - h))};
}

std::uint64_t binomial_u64(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t acc = 1;
  // acc * (n - i) / (i + 1) stays integral at every step; n <= 62 keeps the
  // intermediate product below 2^64 after the division.
  for (int i = 0; i < k; ++i) {
    acc = acc / static_cast<std::uint64_t>(i + 1) * static_cast<std::uint64_t>(n - i) +
          acc % static_cast<std::uint64_t>(i + 1) * static_cast<std::uint64_t>(n - i) /
              static_cast<std::uint64_t>(i + 1);
  }
  return acc;
}

double sqrt_exp(double log_value) { return log_value == kNegInf ? 0.0 : std::exp(0.5 * log_value); }

}  // namespace

double log_binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return kNegInf;
  if (k == 0 || k == n) return 0.0;
  return log_gamma(static_cast<double>(n) + 1.0) - log_gamma(static_cast<double>(k) + 1.0) -
         log_gamma(static_cast<double>(n - k) + 1.0);
}

double binomial(long long n, long long k) {
  double l = log_binomial(n, k);
  return l == kNegInf ? 0.0 : std::exp(l);
}

double binomial_ratio(long long n1, long long k1, long long n2, long long k2) {
  double num = log_binomial(n1, k1);
  if (num == kNegInf) return 0.0;
  double den = log_binomial(n2, k2);
  if (den == kNegInf) throw ContractViolation("binomial_ratio: zero denominator");
  return std::exp(num - den);
}

double binary_entropy(double x) {
  if (x < 0.0 || x > 1.0) throw ContractViolation("binary_entropy: argument outside [0, 1]");
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double falling_factorial(double x, int m) {
  if (m < 0) throw ContractViolation("falling_factorial: negative order");
  double acc = 1.0;
  for (int i = 0; i < m; ++i) acc *= x - i;
  return acc;
}

double rising_factorial(double x, int m) {
  if (m < 0) throw ContractViolation("rising_factorial: negative order");
  double acc = 1.0;
  for (int i = 0; i < m; ++i) acc *= x + i;
  return acc;
}

double SpectrumTable::trace() const {
  double acc = 0.0;
  for (const auto& e : entries) acc += e.eigenvalue * static_cast<double>(e.multiplicity);
  return acc;
}

void validate_code_parameters(int n, int k, int t, int alpha) {
  auto fail = [&](const std::string& why) {
    throw ConfigError("invalid parameters (n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                      ", t=" + std::to_string(t) + ", alpha=" + std::to_string(alpha) + "): " + why);
  };
  if (n < 1) fail("n must be positive");
  if (k < 0) fail("k must be non-negative");
  if (alpha < 0) fail("alpha must be non-negative");
  if (k + alpha > n) fail("k + alpha exceeds n");
  if (t < 0 || t > n) fail("t outside 0..n");
}

SpectrumTable phi_avg_reduced(int n, int k, int t, int alpha) {
  validate_code_parameters(n, k, t, alpha);
  if (k + t > 62) throw ConfigError("phi_avg_reduced: k + t is limited to 62");
  SpectrumTable table{n, k, t, alpha, {}};
  table.entries.reserve(static_cast<std::size_t>((k + 1) * (t + 1)));
  for (int j = 0; j <= k; ++j) {
    for (int i = 0; i <= t; ++i) {
      double lr = log_sector_ratio(n, t, j + alpha, i);
      double ev = lr == kNegInf ? 0.0 : std::exp(lr - k * kLn2);
      std::uint64_t mult = binomial_u64(k, j) * binomial_u64(t, i);
      table.entries.push_back({j, i, ev, mult});
    }
  }
  return table;
}

double beta(int n, int k, int t, int alpha, int i) {
  validate_code_parameters(n, k, t, alpha);
  if (i < 0 || i > t) throw ContractViolation("beta: i outside 0..t");
  double l = log_beta(n, k, t, alpha, i);
  return l == kNegInf ? 0.0 : std::exp(l);
}

std::vector<double> betas(int n, int k, int t, int alpha) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(t) + 1);
  for (int i = 0; i <= t; ++i) out.push_back(beta(n, k, t, alpha, i));
  return out;
}

FidelityDistance choi_fidelity_closed(int n, int k, int t, int alpha) {
  validate_code_parameters(n, k, t, alpha);
  if (t == 0) return {};
  // Both operators are diagonal in the product weight basis, so
  // 1 - F = (1/2) sum mult (sqrt p - sqrt q)^2 with p the averaged state and
  // q = 2^{-k} beta_i.
  double h = 0.0;
  for (int i = 0; i <= t; ++i) {
    double lb = log_beta(n, k, t, alpha, i);
    for (int j = 0; j <= k; ++j) {
      double lr = log_sector_ratio(n, t, j + alpha, i);
      double diff = sqrt_exp(lr) - sqrt_exp(lb);
      double lmult = log_binomial(k, j) + log_binomial(t, i) - k * kLn2;
      h += std::exp(lmult) * diff * diff;
    }
  }
  return from_infidelity(0.5 * h);
}

double avg_state_trace_distance(int n, int k, int t, int alpha) {
  validate_code_parameters(n, k, t, alpha);
  if (t == 0) return 0.0;
  double acc = 0.0;
  for (int i = 0; i <= t; ++i) {
    double lb = log_beta(n, k, t, alpha, i);
    double q = lb == kNegInf ? 0.0 : std::exp(lb);
    for (int j = 0; j <= k; ++j) {
      double lr = log_sector_ratio(n, t, j + alpha, i);
      double p = lr == kNegInf ? 0.0 : std::exp(lr);
      double lmult = log_binomial(k, j) + log_binomial(t, i) - k * kLn2;
      acc += std::exp(lmult) * std::abs(p - q);
    }
  }
  return acc;
}

double leading_order(int n, int k, int t, double a, BoundKind which) {
  if (!(a > 0.0 && a < 1.0)) throw ContractViolation("leading_order: a must lie in (0, 1)");
  if (n < 1 || k < 0 || t < 0) throw ContractViolation("leading_order: invalid n, k or t");
  double denom = 4.0 * n * std::sqrt(a * (1.0 - a));
  if (which == BoundKind::kChoi) return std::sqrt(static_cast<double>(t) * k) / denom;
  return k * std::sqrt(static_cast<double>(t)) / denom;
}

MinEntropyBounds kappa(int n, int k, int t, int alpha) {
  validate_code_parameters(n, k, t, alpha);
  double log_kappa = kNegInf;
  const int i_lo = std::max(0, alpha - t);
  const int i_hi = std::min(n - t, alpha + k);
  for (int i = i_lo; i <= i_hi; ++i) {
    double inner = kNegInf;
    for (int j = std::max(alpha, i); j <= std::min(alpha + k, i + t); ++j) {
      inner = log_add(inner, log_binomial(t, j - i) + log_binomial(k, j - alpha) -
                                 0.5 * (k * kLn2 + log_binomial(n, j)));
    }
    if (inner != kNegInf) log_kappa = log_add(log_kappa, 2.0 * inner);
  }
  MinEntropyBounds b;
  b.lower = -log_kappa / kLn2;
  b.upper = b.lower + std::log2(static_cast<double>(k + t + 1));
  b.kappa_or_chi = std::exp(log_kappa);
  return b;
}

double entropy_floor(int n, int k, int t, int alpha) {
  validate_code_parameters(n, k, t, alpha);
  double h = std::min(binary_entropy(static_cast<double>(alpha) / n),
                      binary_entropy(static_cast<double>(alpha + k) / n));
  return n * h - 2.0 * t - k;
}

MinEntropyBounds hmin_x(int n, int t, int alpha, int wx) {
  if (n < 1 || t < 0 || t > n || wx < 0 || alpha < 0 || wx + alpha > n) {
    throw ContractViolation("hmin_x: weights out of range");
  }
  double log_val = log_binomial(2 * t, t) - log_binomial(n, wx + alpha);
  MinEntropyBounds b;
  b.lower = -log_val / kLn2;
  b.upper = b.lower + std::log2(static_cast<double>(t + 1));
  b.kappa_or_chi = std::exp(log_val);
  return b;
}

MinEntropyBounds hmin_xxp(int n, int t, int alpha, int wx, int wxp) {
  if (n < 1 || t < 0 || t > n || wx < 0 || wxp < 0 || alpha < 0 || wx + alpha > n ||
      wxp + alpha > n) {
    throw ContractViolation("hmin_xxp: weights out of range");
  }
  const double lc = log_binomial(2 * t, t);
  const double la = log_binomial(n, wx + alpha);
  const double lb = log_binomial(n, wxp + alpha);
  double log_chi = log_add(lc - la, lc - lb);
  double cross = log_binomial(2 * t, t + wx - wxp);
  if (cross != kNegInf) log_chi = log_add(log_chi, kLn2 + cross - 0.5 * (la + lb));
  MinEntropyBounds b;
  b.lower = -(log_chi - kLn2) / kLn2;
  b.upper = b.lower + std::log2(static_cast<double>(t + 1));
  b.kappa_or_chi = std::exp(log_chi);
  return b;
}

FidelityDistance worst_zeta_closed(int n, int k, int t, int alpha, int wx) {
  validate_code_parameters(n, k, t, alpha);
  if (wx < 0 || wx > k) throw ContractViolation("worst_zeta_fidelity: wx outside 0..k");
  if (t == 0) return {};
  double h = 0.0;
  for (int i = 0; i <= t; ++i) {
    double diff = sqrt_exp(log_sector_ratio(n, t, wx + alpha, i)) -
                  sqrt_exp(log_beta(n, k, t, alpha, i));
    h += binomial(t, i) * diff * diff;
  }
  return from_infidelity(0.5 * h);
}

double worst_zeta_fidelity(int n, int k, int t, int alpha, int wx) {
  return worst_zeta_closed(n, k, t, alpha, wx).fidelity;
}

double worst_avg_distance(int n, int k, int t, int alpha) {
  double best = 0.0;
  for (int wx = 0; wx <= k; ++wx) {
    best = std::max(best, worst_zeta_closed(n, k, t, alpha, wx).purified);
  }
  return best;
}

LowerBounds lower_bounds(int n, int k) {
  if (n < 1 || k < 1) throw ContractViolation("lower_bounds: need n >= 1 and k >= 1");
  const int half = (k + 1) / 2;
  double choi = std::exp(log_binomial(k, half) + std::log(static_cast<double>(half)) - k * kLn2) / n;
  return {choi, k / (2.0 * n)};
}

GeneralLowerBounds general_t_lower(int n, int k, int t, ErasureScheme scheme) {
  using boost::multiprecision::cpp_int;
  using boost::multiprecision::cpp_rational;
  if (n < 1 || k < 1 || t < 1 || t > n) {
    throw ConfigError("general_t_lower: need n >= 1, k >= 1 and 1 <= t <= n");
  }
  cpp_rational spread;  // Delta T_a
  cpp_rational prob;    // q_a
  if (scheme == ErasureScheme::kGrouped) {
    if (n % t != 0) {
      throw ConfigError("general_t_lower: grouped scheme needs t | n (n=" + std::to_string(n) +
                        ", t=" + std::to_string(t) + ")");
    }
    spread = t;
    prob = cpp_rational(t, n);
  } else {
    cpp_int subsets = 1;
    for (int i = 0; i < t; ++i) subsets = subsets * (n - i) / (i + 1);
    // T_a = (n/t) C(n,t)^{-1} Q on the subset, so Delta T_a = n / C(n,t).
    spread = cpp_rational(cpp_int(n), subsets);
    prob = cpp_rational(cpp_int(1), subsets);
  }
  const double denom = static_cast<double>(cpp_rational(spread / prob));

  // Logical charge spectrum: weight w with multiplicity C(k, w). Lower median
  // of the 2^k sorted eigenvalues.
  const double total = std::ldexp(1.0, k);
  const double median_rank = std::floor((total - 1.0) / 2.0);
  int median = 0;
  double seen = 0.0;
  for (int w = 0; w <= k; ++w) {
    seen += binomial(k, w);
    if (seen > median_rank) {
      median = w;
      break;
    }
  }
  double dev = 0.0;
  for (int w = 0; w <= k; ++w) dev += binomial(k, w) * std::abs(w - median);
  return {dev / total / denom, k / (2.0 * denom), denom};
}

}  // namespace covcode
