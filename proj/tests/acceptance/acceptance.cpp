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

// Runs every acceptance criterion and prints one [PASS]/[FAIL] line each.
// Supporting numbers are printed as indented lines above the verdict.
//
//   covcode_acceptance            all criteria
//   covcode_acceptance --only 5   a single criterion

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <memory>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "covcode/analytics.hpp"
#include "covcode/baseline.hpp"
#include "covcode/encoder.hpp"
#include "covcode/error_metrics.hpp"
#include "covcode/min_entropy.hpp"
#include "covcode/qstate.hpp"
#include "covcode/random.hpp"
#include "covcode/sectors.hpp"
#include "covcode/statistics.hpp"
#include "harness/config.hpp"
#include "harness/report.hpp"
#include "harness/runs.hpp"
#include "oracles.hpp"

namespace covcode::acceptance {
namespace {

using harness::AlphaRule;
using harness::ExperimentConfig;
using harness::Mode;
using harness::Report;

std::string num(double v) { return harness::format_number(v); }

class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    std::printf("    %s %s\n", ok ? "ok  " : "FAIL", what.c_str());
    all_ &= ok;
  }
  void note(const std::string& what) { std::printf("    info %s\n", what.c_str()); }
  bool passed() const { return all_; }

 private:
  bool all_ = true;
};

std::shared_ptr<const SectorDecomposition> sectors(int n) {
  return std::make_shared<const SectorDecomposition>(hamming_sectors(n));
}

// 1. Log-log slopes of the averaged-state error on the k = t = 2 grid.
void slopes(Checks& c) {
  const Report rep = harness::run_scaling(harness::slope_table_config());
  struct Target {
    const char* series;
    double purified;
    double one_norm;
  };
  const Target targets[] = {{"1", -0.50, -1.00}, {"5", -0.50, -1.00}, {"n/3", -1.00, -1.00}, {"n/2", -1.00, -1.00}};
  for (const Target& t : targets) {
    const auto& p = rep.fit("error_purified", t.series).fit;
    const auto& o = rep.fit("error_1norm", t.series).fit;
    c.expect(std::abs(p.slope - t.purified) <= 0.03, std::string("alpha=") + t.series + " purified slope " +
                                                         num(p.slope) + " (r2 " + num(p.r_squared) +
                                                         ") target " + num(t.purified) + " +- 0.03");
    c.expect(std::abs(o.slope - t.one_norm) <= 0.03, std::string("alpha=") + t.series + " 1-norm slope " +
                                                         num(o.slope) + " (r2 " + num(o.r_squared) +
                                                         ") target " + num(t.one_norm) + " +- 0.03");
  }
  // Same fits on a wider window, for comparison only.
  ExperimentConfig wide = harness::slope_table_config();
  wide.n_values = harness::log_spaced(100, 10000, 20);
  const Report far = harness::run_scaling(wide);
  for (const Target& t : targets) {
    c.note(std::string("n in [100,10000], alpha=") + t.series + ": purified " +
           num(far.fit("error_purified", t.series).fit.slope) + ", 1-norm " +
           num(far.fit("error_1norm", t.series).fit.slope));
  }
}

// 2. P * 2n at half filling, k = t = 1.
void saturation(Checks& c) {
  for (int n : {200, 400, 1000, 4000}) {
    const double scaled = choi_fidelity_closed(n, 1, 1, n / 2).purified * 2.0 * n;
    c.expect(scaled >= 0.95 && scaled <= 1.05, "n=" + std::to_string(n) + " P*2n = " + num(scaled));
  }
}

// 3. Upper/lower ratios at n = 400, t = 1, a = 1/2.
void lower_bound_match(Checks& c) {
  ExperimentConfig cfg;
  cfg.mode = Mode::kCompare;
  cfg.n_values = {400};
  cfg.k_values = {1, 2, 4};
  cfg.t = 1;
  cfg.alphas = {AlphaRule::fraction(1, 2)};
  const Report rep = harness::run_compare(cfg);
  for (std::size_t r = 0; r < rep.table.size(); ++r) {
    const int k = static_cast<int>(rep.table.number(r, "k"));
    const double worst = rep.table.number(r, "worst_closed_ratio");
    c.expect(std::abs(worst - 1.0) <= 0.02, "k=" + std::to_string(k) + " worst ratio (exact averaged state) " +
                                                num(worst) + ", leading order " +
                                                num(rep.table.number(r, "worst_ratio")));
    if (k == 1) {
      const double choi = rep.table.number(r, "choi_closed_ratio");
      c.expect(std::abs(choi - 1.0) <= 0.02, "k=1 Choi ratio (exact averaged state) " + num(choi) +
                                                 ", leading order " + num(rep.table.number(r, "choi_ratio")));
    }
  }
}

// 4. Convergence of n(1 - F) to the constant-alpha coefficient.
void constant_alpha(Checks& c) {
  for (int alpha : {1, 2, 3}) {
    const double a = alpha;
    const double coeff = (-std::sqrt(2.0) - 2.0 * std::sqrt(2.0) * a + std::sqrt(a * (2 * a + 1)) +
                          std::sqrt((a + 1) * (2 * a + 1))) /
                         (2.0 * std::sqrt(2.0));
    std::vector<double> ns, residual;
    for (int n = 50; n <= 400; n += 10) {
      ns.push_back(n);
      residual.push_back(std::abs(-n * choi_fidelity_closed(n, 1, 1, alpha).infidelity - coeff));
    }
    const SlopeFit f = fit_loglog(ns, residual);
    c.expect(f.slope <= -0.9, "alpha=" + std::to_string(alpha) + " coefficient " + num(coeff) +
                                  ", residual slope " + num(f.slope) + " (r2 " + num(f.r_squared) +
                                  "), residual at n=400 " + num(residual.back()));
  }
}

Report montecarlo(std::vector<int> ns) {
  ExperimentConfig cfg;
  cfg.mode = Mode::kMonteCarlo;
  cfg.n_values = std::move(ns);
  cfg.k = 1;
  cfg.t = 1;
  cfg.alphas = {AlphaRule::fraction(1, 2)};
  cfg.seeds = 200;
  cfg.master_seed = 20260101;
  return harness::run_montecarlo(cfg);
}

// 5. Decoupling deviation and the Markov fraction.
void concentration(Checks& c) {
  const Report rep = montecarlo({8, 10});
  for (std::size_t r = 0; r < rep.table.size(); ++r) {
    const auto& tb = rep.table;
    const std::string n = "n=" + num(tb.number(r, "n"));
    const double mean = tb.number(r, "deviation_mean");
    const double bound = tb.number(r, "deviation_bound");
    const double err = tb.number(r, "deviation_stderr");
    c.expect(mean <= bound + 3.0 * err, n + " mean deviation " + num(mean) + " <= sqrt2 kappa^1/4 " + num(bound) +
                                            " + 3 x " + num(err));
    const double frac = tb.number(r, "markov_violation_fraction");
    c.expect(frac <= 0.10, n + " fraction above 2(avg + bound) = " + num(frac) + " (95% CI " +
                               num(tb.number(r, "markov_violation_lo")) + ".." +
                               num(tb.number(r, "markov_violation_hi")) + ")");
  }
}

// 6. Worst-case bound on sampled codes.
void worst_case(Checks& c) {
  const Report rep = montecarlo({8});
  const auto& tb = rep.table;
  const double median = tb.number(0, "worst_upper_median");
  const double lower = tb.number(0, "worst_lower_bound");
  c.expect(median >= lower, "median worst-case upper " + num(median) + " >= k/(2n) " + num(lower));
  const double off = tb.number(0, "eps_offdiag_mean");
  const double off_bound = tb.number(0, "offdiag_bound");
  const double off_err = tb.number(0, "eps_offdiag_stderr");
  c.expect(off <= off_bound + 3.0 * off_err, "mean ||rho^{x,x'}||_1 " + num(off) + " <= 2^{-hmin/2} " +
                                                 num(off_bound) + " + 3 x " + num(off_err));
}

// 7. Min-entropy certificates and block sandwiches.
void certificates(Checks& c) {
  std::mt19937_64 rng(7007);
  double worst_gap = 0.0;
  bool feasible = true;
  for (int trial = 0; trial < 100; ++trial) {
    const int p_qubits = 1 + trial % 3;
    const int q_qubits = 1 + (trial / 3) % 3;
    const PureState psi = oracle::random_pure(p_qubits + q_qubits, rng);
    std::vector<int> p(static_cast<std::size_t>(p_qubits));
    for (int i = 0; i < p_qubits; ++i) p[static_cast<std::size_t>(i)] = i;
    const PureMinEntropy h = min_entropy_pure(psi, p);
    const double target = std::exp2(-h.value);
    worst_gap = std::max({worst_gap, std::abs(h.certificate->primal_value - target),
                          std::abs(h.certificate->dual_value - target)});
    feasible &= h.certificate->feasible(1e-9);
  }
  c.expect(worst_gap <= 1e-9 && feasible, "100 pure states: max |certificate - 2^{-H}| = " + num(worst_gap) +
                                              (feasible ? ", all feasible" : ", infeasible certificate"));

  bool sandwich = true;
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 2 + trial % 3;
    std::vector<PureState> blocks;
    std::vector<double> w;
    std::vector<int> ranks;
    double total = 0.0;
    for (int b = 0; b < m; ++b) {
      blocks.push_back(oracle::random_pure(3, rng));
      ranks.push_back(1 + b % 2);
      w.push_back(std::uniform_real_distribution<double>(0.2, 1.0)(rng));
      total += w.back() * ranks.back();
    }
    for (double& x : w) x /= total;
    const BlockStateSandwich s = block_state_sandwich(blocks, w, ranks, 1);
    sandwich &= s.feasible(1e-9) && std::abs(s.primal_value - s.sum_s) <= 1e-9 &&
                std::abs(s.dual_value - s.lower) <= 1e-9 && s.lower <= s.sum_s + 1e-12;
  }
  c.expect(sandwich, "20 block states: feasible points certify lower <= H-value <= sum");
}

// 8. Closed form vs explicit matrices, and the Monte Carlo average.
void equivalence(Checks& c) {
  double worst = 0.0;
  int cases = 0;
  for (int n = 2; n <= 10; ++n) {
    for (int k = 1; k <= std::min(2, n - 1); ++k) {
      for (int t = 0; t <= 2; ++t) {
        for (int alpha = 0; alpha <= n - k; ++alpha) {
          const SpectrumTable s = phi_avg_reduced(n, k, t, alpha);
          const DensityOperator joint = avg_environment_state(s);
          const DensityOperator zeta = DensityOperator(
              kron(marginal_zeta(n, k, t, alpha).matrix(), CMatrix::Identity(1 << k, 1 << k) / double(1 << k)));
          worst = std::max(worst, std::abs(fidelity(joint, zeta) - choi_fidelity_closed(n, k, t, alpha).fidelity));
          ++cases;
        }
      }
    }
  }
  c.expect(worst <= 1e-10, std::to_string(cases) + " parameter sets, max |closed - matrix| = " + num(worst));

  const int n = 6, k = 1, t = 1, alpha = 3, seeds = 1000;
  const auto params = CodeParams::make(n, k, alpha, t);
  const auto dec = sectors(n);
  CMatrix mean = CMatrix::Zero(1 << (t + k), 1 << (t + k));
  for (int s = 0; s < seeds; ++s) {
    const EncodedState enc = encode(sample_block_haar(dec, derive_seed(808, s)), maximally_entangled(k), params);
    mean += complementary_output(enc).matrix();
  }
  mean /= seeds;
  const double tv = 0.5 * trace_norm(mean - avg_environment_state(phi_avg_reduced(n, k, t, alpha)).matrix());
  c.expect(tv < 0.02, "n=6 sample mean of 1000 outputs vs averaged spectrum: TV = " + num(tv));
}

// 9. Fully Haar encoder without symmetry.
void no_symmetry(Checks& c) {
  std::vector<double> means;
  for (int n : {6, 8, 10}) {
    means.push_back(no_symmetry_baseline(n, 1, 1, 100, 909).error.mean);
    c.note("n=" + std::to_string(n) + " no-symmetry mean Choi bound " + num(means.back()));
  }
  c.expect(means[0] > means[1] && means[1] > means[2], "strictly decreasing in n");
  const auto params = CodeParams::make(10, 1, 5, 1);
  const auto dec = sectors(10);
  std::vector<double> sym;
  for (int s = 0; s < 100; ++s) sym.push_back(choi_error_upper(sample_block_haar(dec, derive_seed(910, s)), params).total_upper);
  const double sym_mean = summarize(sym).mean;
  c.expect(means[2] < sym_mean, "n=10 no-symmetry " + num(means[2]) + " < charge-conserving " + num(sym_mean));
}

// 10. Property suite.
void properties(Checks& c) {
  std::mt19937_64 rng(1010);
  bool sandwich = true, triangle = true;
  for (int i = 0; i < 200; ++i) {
    const DensityOperator a = oracle::random_density(2, rng);
    const DensityOperator b = oracle::random_density(2, rng);
    const double one = trace_norm(a.matrix() - b.matrix());
    const double p = purified_distance(a, b);
    sandwich &= 0.5 * one <= p + 1e-9 && p <= std::sqrt(2.0 * one) + 1e-9;
    if (i < 100) {
      const DensityOperator d = oracle::random_density(2, rng);
      triangle &= purified_distance(a, d) <= p + purified_distance(b, d) + 1e-9;
    }
  }
  c.expect(sandwich, "distance sandwich on 200 random pairs");
  c.expect(triangle, "purified-distance triangle inequality on 100 triples");

  double defect = 0.0;
  const std::vector<double> thetas{0.3, 1.1, std::numbers::pi / 2, 2.9};
  for (std::uint64_t s = 0; s < 5; ++s) {
    defect = std::max(defect, covariance_defect(sample_block_haar(sectors(5), s), CodeParams::make(5, 2, 1, 2), thetas));
  }
  c.expect(defect <= 1e-10, "covariance defect of sampled codes " + num(defect));

  bool exact = true;
  std::mt19937_64 draw(1011);
  for (int i = 0; i < 50; ++i) {
    const int n = std::uniform_int_distribution<int>(2, 30)(draw);
    const int k = std::uniform_int_distribution<int>(1, std::min(4, n - 1))(draw);
    const int t = std::uniform_int_distribution<int>(0, std::min(4, n))(draw);
    const int alpha = std::uniform_int_distribution<int>(0, n - k)(draw);
    exact &= oracle::spectrum_trace(n, k, t, alpha) == 1;
  }
  c.expect(exact, "spectrum trace equals 1 in rational arithmetic on 50 draws");

  ExperimentConfig cfg;
  cfg.mode = Mode::kMonteCarlo;
  cfg.n_values = {6, 7};
  cfg.seeds = 16;
  cfg.master_seed = 42;
  const std::string first = harness::to_csv(harness::run(cfg).table);
  cfg.workers = 3;
  const std::string second = harness::to_csv(harness::run(cfg).table);
  c.expect(first == second, "identical config and seed give byte-identical CSV (1 and 3 workers)");
}

struct Criterion {
  int id;
  const char* title;
  std::function<void(Checks&)> body;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "slopes of the averaged-state error over n in [20,400]", slopes},
      {2, "leading-order saturation at half filling", saturation},
      {3, "upper bounds match lower bounds at t=1", lower_bound_match},
      {4, "constant-alpha expansion converges at O(1/n)", constant_alpha},
      {5, "decoupling concentration on sampled codes", concentration},
      {6, "worst-case bound on sampled codes", worst_case},
      {7, "min-entropy certificates and block sandwiches", certificates},
      {8, "closed form, matrix and Monte Carlo paths agree", equivalence},
      {9, "no-symmetry baseline contrast", no_symmetry},
      {10, "property suite", properties},
  };
  return all;
}

}  // namespace
}  // namespace covcode::acceptance

int main(int argc, char** argv) {
  using covcode::acceptance::Checks;
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      const char* s = argv[++i];
      if (std::from_chars(s, s + std::strlen(s), only).ec != std::errc{}) only = -1;
    } else {
      std::fprintf(stderr, "usage: %s [--only N]\n", argv[0]);
      return 2;
    }
  }
  int failed = 0, ran = 0;
  for (const auto& c : covcode::acceptance::criteria()) {
    if (only != 0 && c.id != only) continue;
    ++ran;
    Checks checks;
    bool ok = false;
    try {
      c.body(checks);
      ok = checks.passed();
    } catch (const std::exception& e) {
      std::printf("    error %s\n", e.what());
    }
    std::printf("[%s] %d %s\n", ok ? "PASS" : "FAIL", c.id, c.title);
    std::fflush(stdout);
    failed += !ok;
  }
  if (ran == 0) {
    std::fprintf(stderr, "no criterion with id %d\n", only);
    return 2;
  }
  return failed == 0 ? 0 : 1;
}
