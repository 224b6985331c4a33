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

#include "harness/runs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

#include "covcode/analytics.hpp"
#include "covcode/encoder.hpp"
#include "covcode/error_metrics.hpp"
#include "covcode/errors.hpp"
#include "covcode/parallel.hpp"
#include "covcode/random.hpp"
#include "covcode/sectors.hpp"

namespace covcode::harness {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr int kMaxSampledQubits = 16;

std::int64_t as_int(int v) { return v; }

double fraction_of(int alpha, int n) { return static_cast<double>(alpha) / n; }

double leading_or_nan(int n, int k, int t, double a, BoundKind which) {
  return (a > 0.0 && a < 1.0) ? leading_order(n, k, t, a, which) : kNaN;
}

void check_range(double v, const char* what) {
  if (!(v >= -tol::kStructural && v <= 2.0 + tol::kStructural)) {
    throw InvariantViolation(std::string(what) + " = " + format_number(v) + " outside [0, 2]");
  }
}

void check_interval(const MinEntropyBounds& b, const char* what) {
  if (!(b.lower <= b.upper)) {
    throw InvariantViolation(std::string(what) + ": lower " + format_number(b.lower) +
                             " exceeds upper " + format_number(b.upper));
  }
}

std::vector<NamedFit> fit_series(const Table& table, const std::vector<std::string>& metrics,
                                 const std::string& series_column) {
  std::vector<std::string> series;
  for (std::size_t r = 0; r < table.size(); ++r) {
    const std::string& s = table.text(r, series_column);
    if (std::find(series.begin(), series.end(), s) == series.end()) series.push_back(s);
  }
  std::vector<NamedFit> fits;
  for (const std::string& s : series) {
    for (const std::string& metric : metrics) {
      std::vector<double> xs;
      std::vector<double> ys;
      for (std::size_t r = 0; r < table.size(); ++r) {
        if (table.text(r, series_column) != s) continue;
        const double y = table.number(r, metric);
        if (!(y > 0.0)) continue;
        xs.push_back(table.number(r, "n"));
        ys.push_back(y);
      }
      if (xs.size() < 2) continue;
      const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
      fits.push_back({metric, s, fit_loglog(xs, ys), static_cast<int>(*lo), static_cast<int>(*hi)});
    }
  }
  return fits;
}

// Largest decoupling bound 2^{-H/2} over the weight pairs that distinct
// k-bit strings can carry.
double offdiag_bound(int n, int k, int t, int alpha) {
  double best = 0.0;
  for (int wx = 0; wx <= k; ++wx) {
    for (int wxp = wx; wxp <= k; ++wxp) {
      if (wx == wxp && binomial(k, wx) < 2.0) continue;
      best = std::max(best, std::exp2(-0.5 * hmin_xxp(n, t, alpha, wx, wxp).lower));
    }
  }
  return best;
}

struct SeedSample {
  double deviation_term = 0.0;
  double deviation_one_norm = 0.0;
  double avg_state_term = 0.0;
  double total_upper = 0.0;
  double worst_upper = kNaN;
  double eps_diag = kNaN;
  double eps_offdiag = kNaN;
  CMatrix output;
};

struct McGroup {
  int n = 0;
  int alpha = 0;
  std::string rule;
  std::uint64_t seed = 0;
  std::shared_ptr<const SectorDecomposition> sectors;
};

SeedSample sample_one(const McGroup& g, const ExperimentConfig& config, std::uint64_t seed) {
  const CodeParams params = CodeParams::make(g.n, config.k, g.alpha, config.t);
  const BlockUnitary unitary = sample_block_haar(g.sectors, seed);
  SeedSample s;
  const EncodedState encoded = encode(unitary, maximally_entangled(config.k), params);
  s.output = complementary_output(encoded).matrix();
  ZetaChoice zeta;
  zeta.kind = config.zeta;
  const ChoiErrorReport choi = choi_error_upper(unitary, params, zeta);
  s.deviation_term = choi.deviation_term;
  s.deviation_one_norm = 0.5 * choi.deviation_term * choi.deviation_term;
  s.avg_state_term = choi.avg_state_term;
  s.total_upper = choi.total_upper;
  check_range(s.deviation_term, "deviation_term");
  check_range(s.total_upper, "total_upper");
  if (config.k <= 4) {
    const WorstCaseReport worst =
        worst_case_error_upper(unitary, params, marginal_zeta(g.n, config.k, config.t, g.alpha));
    s.worst_upper = worst.upper;
    s.eps_diag = worst.eps_diag;
    s.eps_offdiag = worst.eps_offdiag;
  }
  return s;
}

}  // namespace

Report run_scaling(const ExperimentConfig& config) {
  config.validate();
  Report report{config, Table({"n", "k", "t", "alpha_rule", "alpha", "a", "error_1norm",
                               "error_purified", "error_purified_optimal", "leading_order_choi"})};
  const int k = config.k;
  const int t = config.t;
  for (const AlphaRule& rule : config.alphas) {
    for (int n : config.n_values) {
      const int alpha = rule.resolve(n, k);
      const FidelityDistance fd = choi_fidelity_closed(n, k, t, alpha);
      const double one_norm = avg_state_trace_distance(n, k, t, alpha);
      const double p_opt =
          optimal_diagonal_zeta(phi_avg_reduced(n, k, t, alpha), std::uint64_t{1} << k).purified;
      if (p_opt > fd.purified + tol::kDerived) {
        throw InvariantViolation("optimal diagonal zeta is worse than the marginal at n=" +
                                 std::to_string(n));
      }
      const double a = fraction_of(alpha, n);
      report.table.add_row({as_int(n), as_int(k), as_int(t), rule.label(), as_int(alpha), a, one_norm,
                            fd.purified, p_opt, leading_or_nan(n, k, t, a, BoundKind::kChoi)});
    }
  }
  report.fits = fit_series(report.table, {"error_purified", "error_1norm", "error_purified_optimal"},
                           "alpha_rule");
  report.metadata = {
      {"plotted_quantity",
       "average-state term P(Tr Phi_avg, I/2^k x zeta_0) with zeta_0 the marginal; "
       "error_purified_optimal uses the optimal diagonal zeta"},
      {"n_window", std::to_string(*std::min_element(config.n_values.begin(), config.n_values.end())) +
                       ".." +
                       std::to_string(*std::max_element(config.n_values.begin(), config.n_values.end()))},
      {"alpha_rounding", "floor, clamped to [0, n-k]"},
  };
  return report;
}

Report run_montecarlo(const ExperimentConfig& config) {
  config.validate();
  const int k = config.k;
  const int t = config.t;
  std::vector<McGroup> groups;
  for (int n : config.n_values) {
    if (n > 12) throw ConfigError("montecarlo: sampled path needs n <= 12 (got n=" + std::to_string(n) + ")");
    if (n + k > kMaxSampledQubits) {
      const double mib = std::ldexp(16.0, n + k) / (1024.0 * 1024.0);
      throw ConfigError("montecarlo: n + k = " + std::to_string(n + k) + " qubits exceeds " +
                        std::to_string(kMaxSampledQubits) + " (state vector ~" + format_number(mib) +
                        " MiB)");
    }
    auto sectors = std::make_shared<const SectorDecomposition>(hamming_sectors(n));
    for (const AlphaRule& rule : config.alphas) {
      const int alpha = rule.resolve(n, k);
      CodeParams::make(n, k, alpha, t).validate();
      const std::uint64_t key = (static_cast<std::uint64_t>(n) << 40) |
                                (static_cast<std::uint64_t>(k) << 20) | static_cast<std::uint64_t>(alpha);
      groups.push_back({n, alpha, rule.label(), derive_seed(config.master_seed, key), sectors});
    }
  }

  const auto seeds = static_cast<std::size_t>(config.seeds);
  const auto samples = parallel_map(groups.size() * seeds, config.workers, [&](std::size_t item) {
    const McGroup& g = groups[item / seeds];
    return sample_one(g, config, derive_seed(g.seed, item % seeds));
  });

  Report report{config,
                Table({"n", "k", "t", "alpha_rule", "alpha", "seeds", "avg_state_term", "kappa",
                       "sqrt_kappa", "deviation_bound", "deviation_mean", "deviation_std",
                       "deviation_stderr", "deviation_median", "deviation_q05", "deviation_q95",
                       "deviation_1norm_mean", "deviation_1norm_stderr", "total_mean", "total_median",
                       "total_q05", "total_q95", "leading_order_choi", "markov_threshold",
                       "markov_violation_fraction", "markov_violation_lo", "markov_violation_hi",
                       "tail_violation_fraction", "tail_violation_lo", "tail_violation_hi",
                       "worst_upper_mean", "worst_upper_median", "eps_diag_mean", "eps_offdiag_mean",
                       "eps_offdiag_std", "eps_offdiag_stderr", "offdiag_bound", "worst_lower_bound",
                       "leading_order_worst", "mean_output_distance"})};

  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const McGroup& g = groups[gi];
    std::vector<double> dev, dev1, total, worst, diag, offdiag;
    CMatrix mean_output;
    std::size_t markov = 0;
    std::size_t tail = 0;
    const MinEntropyBounds kap = kappa(g.n, k, t, g.alpha);
    const double dev_bound = std::sqrt(2.0) * std::pow(kap.kappa_or_chi, 0.25);
    const double avg_term = samples[gi * seeds].avg_state_term;
    const double threshold = 2.0 * (avg_term + dev_bound);
    for (std::size_t s = 0; s < seeds; ++s) {
      const SeedSample& x = samples[gi * seeds + s];
      dev.push_back(x.deviation_term);
      dev1.push_back(x.deviation_one_norm);
      total.push_back(x.total_upper);
      if (x.total_upper > threshold) ++markov;
      if (x.deviation_term > 10.0 * dev_bound) ++tail;
      if (k <= 4) {
        worst.push_back(x.worst_upper);
        diag.push_back(x.eps_diag);
        offdiag.push_back(x.eps_offdiag);
      }
      if (s == 0) {
        mean_output = x.output;
      } else {
        mean_output += x.output;
      }
    }
    mean_output /= static_cast<double>(seeds);
    const SpectrumTable spectrum = phi_avg_reduced(g.n, k, t, g.alpha);
    const double output_distance =
        0.5 * trace_norm(mean_output - avg_environment_state(spectrum).matrix());

    const SampleSummary ds = summarize(dev);
    const SampleSummary d1 = summarize(dev1);
    const SampleSummary ts = summarize(total);
    const BinomialInterval mk = wilson_interval(markov, seeds);
    const BinomialInterval tl = wilson_interval(tail, seeds);
    SampleSummary ws, es, os;
    double off_bound = kNaN;
    if (k <= 4) {
      ws = summarize(worst);
      es = summarize(diag);
      os = summarize(offdiag);
      off_bound = t == 0 ? 0.0 : offdiag_bound(g.n, k, t, g.alpha);
    } else {
      ws.mean = ws.median = es.mean = os.mean = os.stddev = os.std_error = kNaN;
    }
    const double a = fraction_of(g.alpha, g.n);
    report.table.add_row(
        {as_int(g.n), as_int(k), as_int(t), g.rule, as_int(g.alpha), static_cast<std::int64_t>(seeds),
         avg_term, kap.kappa_or_chi, std::sqrt(kap.kappa_or_chi), dev_bound, ds.mean, ds.stddev,
         ds.std_error, ds.median, ds.q05, ds.q95, d1.mean, d1.std_error, ts.mean, ts.median, ts.q05,
         ts.q95, leading_or_nan(g.n, k, t, a, BoundKind::kChoi), threshold, mk.fraction, mk.lower,
         mk.upper, tl.fraction, tl.lower, tl.upper, ws.mean, ws.median, es.mean, os.mean, os.stddev,
         os.std_error, off_bound, lower_bounds(g.n, k).worst,
         leading_or_nan(g.n, k, t, a, BoundKind::kWorst), output_distance});
  }
  report.metadata = {{"zeta", std::string(to_string(config.zeta))},
                     {"deviation_bound", "sqrt(2) kappa^(1/4)"},
                     {"markov_threshold", "2 (avg_state_term + deviation_bound)"},
                     {"tail_threshold", "10 deviation_bound"},
                     {"interval", "Wilson 95%"}};
  return report;
}

Report run_compare(const ExperimentConfig& config) {
  config.validate();
  Report report{config,
                Table({"n", "k", "t", "alpha_rule", "alpha", "a", "choi_upper", "choi_lower",
                       "choi_ratio", "worst_upper", "worst_lower", "worst_ratio", "choi_closed",
                       "choi_closed_ratio", "worst_closed", "worst_closed_ratio", "grouped_choi_lower",
                       "grouped_worst_lower", "uniform_choi_lower", "uniform_worst_lower",
                       "exact_match_claim"})};
  for (int k : config.ks()) {
    for (int t : config.ts()) {
      for (const AlphaRule& rule : config.alphas) {
        for (int n : config.n_values) {
          const int alpha = rule.resolve(n, k);
          const double a = fraction_of(alpha, n);
          const LowerBounds lb = lower_bounds(n, k);
          const double cu = leading_or_nan(n, k, t, a, BoundKind::kChoi);
          const double wu = leading_or_nan(n, k, t, a, BoundKind::kWorst);
          const double cc = choi_fidelity_closed(n, k, t, alpha).purified;
          const double wc = worst_avg_distance(n, k, t, alpha);
          double g_choi = kNaN, g_worst = kNaN, u_choi = kNaN, u_worst = kNaN;
          if (t >= 1) {
            if (n % t == 0) {
              const auto g = general_t_lower(n, k, t, ErasureScheme::kGrouped);
              g_choi = g.choi;
              g_worst = g.worst;
            }
            const auto u = general_t_lower(n, k, t, ErasureScheme::kUniform);
            u_choi = u.choi;
            u_worst = u.worst;
          }
          report.table.add_row({as_int(n), as_int(k), as_int(t), rule.label(), as_int(alpha), a, cu,
                                lb.choi, cu / lb.choi, wu, lb.worst, wu / lb.worst, cc, cc / lb.choi,
                                wc, wc / lb.worst, g_choi, g_worst, u_choi, u_worst,
                                std::int64_t{t == 1 ? 1 : 0}});
        }
      }
    }
  }
  report.metadata = {{"upper", "leading-order expressions; *_closed columns use the exact averaged state"},
                     {"exact_match_claim", "1 only for t = 1; lower bounds for t > 1 are loose"}};
  return report;
}

Report run_minentropy(const ExperimentConfig& config) {
  config.validate();
  Report report{config, Table({"n", "k", "t", "alpha_rule", "alpha", "kappa", "kappa_lower",
                               "kappa_upper", "kappa_lower_per_n", "entropy_floor", "wx", "wxp",
                               "hmin_x_lower", "hmin_x_upper", "chi", "hmin_xxp_lower",
                               "hmin_xxp_upper"})};
  // Smallest c with kappa_lower >= entropy_floor - c log2 n over the grid.
  double floor_constant = -std::numeric_limits<double>::infinity();
  for (int k : config.ks()) {
    for (int t : config.ts()) {
      for (const AlphaRule& rule : config.alphas) {
        for (int n : config.n_values) {
          const int alpha = rule.resolve(n, k);
          if (t > n) throw ConfigError("minentropy: t exceeds n=" + std::to_string(n));
          const MinEntropyBounds kap = kappa(n, k, t, alpha);
          check_interval(kap, "kappa");
          const double floor = entropy_floor(n, k, t, alpha);
          floor_constant = std::max(floor_constant, (floor - kap.lower) / std::log2(static_cast<double>(n)));
          for (int wx = 0; wx <= k; ++wx) {
            const MinEntropyBounds hx = hmin_x(n, t, alpha, wx);
            check_interval(hx, "hmin_x");
            for (int wxp = wx; wxp <= k; ++wxp) {
              const MinEntropyBounds hxp = hmin_xxp(n, t, alpha, wx, wxp);
              check_interval(hxp, "hmin_xxp");
              report.table.add_row({as_int(n), as_int(k), as_int(t), rule.label(), as_int(alpha),
                                    kap.kappa_or_chi, kap.lower, kap.upper, kap.lower / n, floor,
                                    as_int(wx), as_int(wxp), hx.lower, hx.upper, hxp.kappa_or_chi,
                                    hxp.lower, hxp.upper});
            }
          }
        }
      }
    }
  }
  report.metadata = {{"floor_log_constant", format_number(floor_constant)},
                     {"entropy_floor", "n min{H(alpha/n), H((alpha+k)/n)} - 2t - k"}};
  return report;
}

Report run_bounds(const ExperimentConfig& config) {
  config.validate();
  Report report{config, Table({"n", "k", "t", "alpha_rule", "alpha", "a", "choi_lower", "worst_lower",
                               "grouped_choi_lower", "grouped_worst_lower", "grouped_denominator",
                               "uniform_choi_lower", "uniform_worst_lower", "uniform_denominator",
                               "leading_order_choi", "leading_order_worst"})};
  for (int k : config.ks()) {
    for (int t : config.ts()) {
      for (const AlphaRule& rule : config.alphas) {
        for (int n : config.n_values) {
          const int alpha = rule.resolve(n, k);
          const double a = fraction_of(alpha, n);
          const LowerBounds lb = lower_bounds(n, k);
          double gc = kNaN, gw = kNaN, gd = kNaN, uc = kNaN, uw = kNaN, ud = kNaN;
          if (t >= 1 && t <= n) {
            if (n % t == 0) {
              const auto g = general_t_lower(n, k, t, ErasureScheme::kGrouped);
              gc = g.choi;
              gw = g.worst;
              gd = g.denominator;
            }
            const auto u = general_t_lower(n, k, t, ErasureScheme::kUniform);
            uc = u.choi;
            uw = u.worst;
            ud = u.denominator;
          }
          report.table.add_row({as_int(n), as_int(k), as_int(t), rule.label(), as_int(alpha), a,
                                lb.choi, lb.worst, gc, gw, gd, uc, uw, ud,
                                leading_or_nan(n, k, t, a, BoundKind::kChoi),
                                leading_or_nan(n, k, t, a, BoundKind::kWorst)});
        }
      }
    }
  }
  report.metadata = {{"median", "lower median of the logical charge spectrum"}};
  return report;
}

MixedErasure mixed_erasure_error(int n, int k, int alpha, double p) {
  if (!(p >= 0.0 && p <= 0.5)) throw ConfigError("mixed erasure: p must lie in [0, 1/2]");
  validate_code_parameters(n, k, 0, alpha);
  MixedErasure out;
  if (p == 0.0) return out;
  const double lp = std::log(p);
  const double lq = std::log1p(-p);
  double cumulative = 0.0;
  for (int t = 0; t <= n; ++t) {
    const double mass = std::exp(log_binomial(n, t) + t * lp + (n - t) * lq);
    cumulative += mass;
    if (mass > 0.0) {
      out.expected_purified += mass * choi_fidelity_closed(n, k, t, alpha).purified;
      out.expected_one_norm += mass * avg_state_trace_distance(n, k, t, alpha);
    }
    out.t_max = t;
    if (1.0 - cumulative < 1e-9 && t >= p * n) break;
  }
  out.truncated_mass = std::max(0.0, 1.0 - cumulative);
  return out;
}

Report run_mixed(const ExperimentConfig& config) {
  config.validate();
  if (config.p_values.empty()) throw ConfigError("mixed: no erasure probabilities given (--p)");
  Report report{config, Table({"n", "k", "alpha_rule", "alpha", "p", "expected_t", "expected_purified",
                               "expected_1norm", "truncated_mass", "t_max"})};
  const int k = config.k;
  for (const AlphaRule& rule : config.alphas) {
    for (int n : config.n_values) {
      const int alpha = rule.resolve(n, k);
      for (double p : config.p_values) {
        const MixedErasure m = mixed_erasure_error(n, k, alpha, p);
        report.table.add_row({as_int(n), as_int(k), rule.label(), as_int(alpha), p, p * n,
                              m.expected_purified, m.expected_one_norm, m.truncated_mass,
                              as_int(m.t_max)});
      }
    }
  }
  report.metadata = {{"truncation", "erased counts summed until the remaining mass is below 1e-9"}};
  return report;
}

Report run(const ExperimentConfig& config) {
  switch (config.mode) {
    case Mode::kScaling: return run_scaling(config);
    case Mode::kMonteCarlo: return run_montecarlo(config);
    case Mode::kCompare: return run_compare(config);
    case Mode::kMinEntropy: return run_minentropy(config);
    case Mode::kBounds: return run_bounds(config);
    case Mode::kMixed: return run_mixed(config);
  }
  throw ConfigError("unknown mode");
}

}  // namespace covcode::harness
