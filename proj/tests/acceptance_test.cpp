// Acceptance suite: one test case per criterion, each printing a
// machine-readable [ACCEPTANCE] line.  Tolerances and thresholds are pinned
// in code; Monte Carlo checks use fixed seeds.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <atomic>
#include <cstdio>
#include <thread>

#include "cliffshadow/bounds.hpp"
#include "cliffshadow/channel.hpp"
#include "cliffshadow/estimators.hpp"
#include "cliffshadow/experiment.hpp"
#include "cliffshadow/oracles.hpp"

using namespace cliffshadow;

namespace {

std::size_t worker_count() {
  std::size_t hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : std::min<std::size_t>(hw, 8);
}

void report(int criterion, const char* label, bool pass, const std::string& detail) {
  std::printf("[ACCEPTANCE] criterion %d (%s): %s  %s\n", criterion, label,
              pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// mean of rho-hat-squared over count snapshots, chunked over workers;
// deterministic for fixed chunk layout because every snapshot owns a stream
Eigen::MatrixXcd mean_snapshot_square(const DensityMatrix& rho, const EnsembleSpec& spec,
                                      const ChannelSpectrum& spectrum, std::size_t count,
                                      std::uint64_t seed) {
  std::size_t workers = worker_count();
  std::vector<Eigen::MatrixXcd> partial(workers,
                                        Eigen::MatrixXcd::Zero(rho.dim(), rho.dim()));
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      std::size_t lo = count * w / workers, hi = count * (w + 1) / workers;
      if (lo == hi) return;
      for_each_snapshot(rho, spec, hi - lo, seed, lo, [&](std::size_t, const Snapshot& s) {
        Eigen::MatrixXcd m = snapshot_to_matrix(s, spectrum);
        partial[w] += m * m;
      });
    });
  }
  for (auto& t : pool) t.join();
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(rho.dim(), rho.dim());
  for (const auto& p : partial) sum += p;
  return sum / static_cast<double>(count);
}

}  // namespace

TEST_CASE("criterion 1: exhaustive unbiasedness of the block estimator") {
  RngStream rng(8101);
  double worst = 0;
  for (std::size_t r : {std::size_t(1), std::size_t(2), std::size_t(4), std::size_t(1),
                        std::size_t(4)}) {
    DensityMatrix rho = random_rank_r_state(2, r, rng);
    Eigen::MatrixXcd mean = exhaustive_mean_estimator_block_k1(rho);
    worst = std::max(worst, (mean - rho.matrix()).cwiseAbs().maxCoeff());
  }
  bool pass = worst < 1e-10;
  report(1, "exhaustive unbiasedness", pass,
         "max entrywise deviation " + fmt(worst) + " (tolerance 1e-10)");
  CHECK(pass);
}

TEST_CASE("criterion 2: brickwork channel value 13/125") {
  EnsembleSpec spec(EnsembleKind::BrickworkPBC, 4, 2);
  PauliString probe = PauliString::parse("ZIII");
  Rational exact = m_brickwork(probe, spec);
  bool exact_ok = exact == Rational(13, 125);

  RngStream rng(8202);
  MonteCarloEstimate est = monte_carlo_m(spec, probe, 100000, rng);
  double target = 13.0 / 125.0;
  bool mc_ok = std::abs(est.estimate - target) <= 5 * est.std_error;

  bool pass = exact_ok && mc_ok;
  report(2, "single-qubit channel value", pass,
         "exact " + exact.to_string() + ", monte carlo " + fmt(est.estimate) + " +- " +
             fmt(est.std_error) + " vs 0.104");
  CHECK(exact_ok);
  CHECK(mc_ok);
}

TEST_CASE("criterion 3: transfer-matrix suite") {
  TransferPair t = build_transfer(2);
  PatternSums sums = g_entries_bruteforce(2);
  const char* names[2][2] = {{"G(agree,agree)", "G(agree,differ)"},
                             {"G(differ,agree)", "G(differ,differ)"}};
  bool g_ok = true;
  std::string g_detail;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      bool eq = sums.entry[a][b] == t.G(a, b);
      if (!eq) {
        g_ok = false;
        g_detail += std::string(names[a][b]) + " brute-force " + sums.entry[a][b].to_string() +
                    " vs closed form " + t.G(a, b).to_string() + "; ";
      }
    }
  }

  EigenPairD closed = lambda_pm(2);
  EigenPairD solved = lambda_pm_eigensolve(2);
  bool lambda_ok = std::abs(closed.plus - solved.plus) < 1e-12 &&
                   std::abs(closed.minus - solved.minus) < 1e-12;

  bool config_ok = true;
  for (std::size_t m = 2; m <= 4; ++m) {
    if (config_sum_bruteforce(t.F, t.G, m) != (t.F * t.G).pow(static_cast<unsigned>(m)).trace())
      config_ok = false;
  }

  bool pass = g_ok && lambda_ok && config_ok;
  std::string detail = std::string("G entries ") + (g_ok ? "match" : ("mismatch: " + g_detail)) +
                       "; eigenvalues " + (lambda_ok ? "match to 1e-12" : "mismatch") +
                       "; configuration sums m=2..4 " + (config_ok ? "exact" : "mismatch");
  report(3, "transfer-matrix suite", pass, detail);
  CHECK(lambda_ok);
  CHECK(config_ok);
  CHECK(g_ok);  // known discrepancy: the brute-force (agree,agree) sum is 4, the stated form 16/5
}

TEST_CASE("criterion 4: second-moment bound at n=4, k=2") {
  const std::size_t count = 100000;
  const std::uint64_t seed = 8404;
  EnsembleSpec spec(EnsembleKind::BrickworkPBC, 4, 2);
  ChannelSpectrum spectrum(spec);
  DensityMatrix rho = DensityMatrix::maximally_mixed(4);

  Eigen::MatrixXcd mean_sq = mean_snapshot_square(rho, spec, spectrum, count, seed);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(mean_sq);
  Eigen::Index top = 0;
  es.eigenvalues().cwiseAbs().maxCoeff(&top);
  double opnorm = std::abs(es.eigenvalues()(top));
  Eigen::VectorXcd v = es.eigenvectors().col(top);

  // second pass over the same streams for the standard error along v
  std::size_t workers = worker_count();
  std::vector<double> acc(workers, 0.0), acc_sq(workers, 0.0);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      std::size_t lo = count * w / workers, hi = count * (w + 1) / workers;
      if (lo == hi) return;
      for_each_snapshot(rho, spec, hi - lo, seed, lo, [&](std::size_t, const Snapshot& s) {
        Eigen::MatrixXcd m = snapshot_to_matrix(s, spectrum);
        double val = (v.adjoint() * (m * m) * v)(0, 0).real();
        acc[w] += val;
        acc_sq[w] += val * val;
      });
    });
  }
  for (auto& t : pool) t.join();
  double sum = 0, sum_sq = 0;
  for (std::size_t w = 0; w < workers; ++w) {
    sum += acc[w];
    sum_sq += acc_sq[w];
  }
  double mean_v = sum / count;
  double sigma = std::sqrt(std::max(sum_sq / count - mean_v * mean_v, 0.0) / count);

  double bound = variance_bound_pbc(4, 2);
  bool pass = opnorm <= bound + 3 * sigma;
  report(4, "second-moment bound", pass,
         "monte carlo opnorm " + fmt(opnorm) + " +- " + fmt(sigma) + " vs bound " + fmt(bound) +
             " (" + fmt(count) + " snapshots)");
  CHECK(pass);
}

TEST_CASE("criterion 5: full-rank concentration and exhaustive mub unbiasedness") {
  const std::size_t trials = 200;
  const std::size_t shots = 400;
  std::vector<double> dist(trials, 0.0);
  std::size_t workers = worker_count();
  std::vector<std::thread> pool;
  std::atomic<std::size_t> counter{0};
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        std::size_t t = counter.fetch_add(1);
        if (t >= trials) return;
        RngStream state_rng(8505, t);
        DensityMatrix rho = random_rank_r_state(2, 4, state_rng);
        MubDataset ds = mub_collect(rho, 2, 1, shots, splitmix64(8505 + 31 * t));
        dist[t] = frobenius_distance(mub_estimator(ds), rho.matrix());
      }
    });
  }
  for (auto& th : pool) th.join();
  double mean = 0;
  for (double d : dist) mean += d;
  mean /= trials;
  double bound = (1.0 / std::sqrt(static_cast<double>(shots))) * (5.0 / 3.0);
  bool conc_ok = mean <= bound;

  RngStream rng(8506);
  double worst = 0;
  for (std::size_t r : {std::size_t(1), std::size_t(2)}) {
    DensityMatrix rho = random_rank_r_state(1, r, rng);
    worst = std::max(worst,
                     (exhaustive_mub_expectation(rho, 1) - rho.matrix()).cwiseAbs().maxCoeff());
  }
  bool unbiased_ok = worst < 1e-10;

  bool pass = conc_ok && unbiased_ok;
  report(5, "full-rank concentration", pass,
         "mean Frobenius error " + fmt(mean) + " vs bound " + fmt(bound) +
             "; exhaustive n=1 deviation " + fmt(worst));
  CHECK(conc_ok);
  CHECK(unbiased_ok);
}

TEST_CASE("criterion 6: combinatorial and edge-trace identities") {
  bool np_ok = sum_inv_NP_bruteforce(2, 1) == Rational(100, 9) &&
               sum_inv_NP(2, 1) == Rational(100, 9);
  bool np_sq_ok = sum_inv_NP_sq_per_basis_bruteforce(2, 1) == Rational(100, 81) &&
                  sum_inv_NP_sq_per_basis(2, 1) == Rational(100, 81);

  TransferPair t = build_transfer(2);
  ObcPair o = build_obc(2);
  Rational fg_tilde = (t.F * o.G_tilde).trace();
  bool fg_tilde_ok = std::abs(fg_tilde.to_double() - trace_fg_tilde_closed(2)) < 1e-12;
  Rational ftilde_g = (o.F_tilde * t.G).trace();
  bool ftilde_g_ok = std::abs(ftilde_g.to_double() - trace_ftilde_g_closed(2)) < 1e-12;

  EigenPairD mu_c = mu_pm(2);
  EigenPairD mu_e = mu_pm_eigensolve(2);
  bool mu_ok =
      std::abs(mu_c.plus - mu_e.plus) < 1e-12 && std::abs(mu_c.minus - mu_e.minus) < 1e-12;

  bool minmp_ok = min_mp(4, 2) == Rational(33, 625);

  bool mono_ok = true;
  for (std::size_t m = 1; m <= 4; ++m) mono_ok = mono_ok && k_contraction_min_at_all_ones(2, m);

  bool pass = np_ok && np_sq_ok && fg_tilde_ok && ftilde_g_ok && mu_ok && minmp_ok && mono_ok;
  std::string detail = std::string("sum 1/N_P ") + (np_ok ? "ok" : "bad") + "; per-basis sum " +
                       (np_sq_ok ? "ok" : "bad") + "; Tr(F Gt) " +
                       (fg_tilde_ok ? "ok" : "bad") + "; Tr(Ft G) " +
                       (ftilde_g_ok ? "ok" : ("matrix trace " + ftilde_g.to_string() +
                                              " vs stated " + fmt(trace_ftilde_g_closed(2)))) +
                       "; mu eigensolve " + (mu_ok ? "ok" : "bad") + "; min m_P " +
                       (minmp_ok ? "ok" : "bad") + "; all-ones minimality " +
                       (mono_ok ? "ok" : "bad");
  report(6, "combinatorial identities", pass, detail);
  CHECK(np_ok);
  CHECK(np_sq_ok);
  CHECK(fg_tilde_ok);
  CHECK(mu_ok);
  CHECK(minmp_ok);
  CHECK(mono_ok);
  CHECK(ftilde_g_ok);  // known discrepancy: trace of the stated matrices is 76/5, stated value 12
}

TEST_CASE("criterion 7: convergence scaling and rank monotonicity") {
  // Slope: 20 trials across the doubling schedule.  Crossing comparison:
  // the rank-4 vs rank-1 gap in samples-to-0.5 is a few percent, so it is
  // resolved with several hundred trials per rank, paired through a common master seed
  // (same unitary streams in both arms); still far inside the runtime
  // budget.
  const std::vector<std::size_t> full_schedule = {256, 512, 1024, 2048, 4096, 8192, 16384};
  const std::vector<std::size_t> tail_schedule = {4096, 8192, 16384};
  const std::size_t slope_trials = 20;
  const std::size_t crossing_trials = 600;

  ExperimentConfig base;
  base.n = 4;
  base.k = 2;
  base.ensemble = EnsembleKind::BrickworkPBC;
  base.estimator = EstimatorKind::Shadow;
  base.seed = 8707;
  base.threads = worker_count();

  ExperimentConfig cfg1 = base;
  cfg1.rank = 1;
  cfg1.schedule = full_schedule;
  cfg1.trials = crossing_trials;
  auto rows1 = run_experiment(cfg1);

  ExperimentConfig cfg4 = base;
  cfg4.rank = 4;
  cfg4.schedule = tail_schedule;
  cfg4.trials = crossing_trials;
  auto rows4 = run_experiment(cfg4);

  auto mean_at = [](const std::vector<ResultRow>& rows, std::size_t samples,
                    std::size_t max_trial) {
    double sum = 0;
    std::size_t count = 0;
    for (const auto& r : rows) {
      if (r.samples == samples && r.trial < max_trial) {
        sum += r.trace_dist;
        ++count;
      }
    }
    return sum / static_cast<double>(count);
  };

  // least-squares slope of log(mean distance over 20 trials) against log(T)
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t t : full_schedule) {
    double x = std::log(static_cast<double>(t));
    double y = std::log(mean_at(rows1, t, slope_trials));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  std::size_t npts = full_schedule.size();
  double slope = (npts * sxy - sx * sy) / (npts * sxx - sx * sx);
  bool slope_ok = slope >= -0.65 && slope <= -0.35;

  // interpolated sample count at which the mean curve crosses 0.5
  auto crossing = [&](const std::vector<ResultRow>& rows) {
    for (std::size_t i = 0; i + 1 < tail_schedule.size(); ++i) {
      double y0 = mean_at(rows, tail_schedule[i], crossing_trials);
      double y1 = mean_at(rows, tail_schedule[i + 1], crossing_trials);
      if (y0 >= 0.5 && y1 <= 0.5) {
        double x0 = std::log(static_cast<double>(tail_schedule[i]));
        double x1 = std::log(static_cast<double>(tail_schedule[i + 1]));
        double f = (std::log(y0) - std::log(0.5)) / (std::log(y0) - std::log(y1));
        return std::exp(x0 + f * (x1 - x0));
      }
    }
    return std::numeric_limits<double>::quiet_NaN();
  };
  double t1 = crossing(rows1);
  double t4 = crossing(rows4);
  bool mono_ok = std::isfinite(t1) && std::isfinite(t4) && t4 > t1;

  bool pass = slope_ok && mono_ok;
  report(7, "convergence scaling", pass,
         "slope " + fmt(slope) + " (want -0.5 +- 0.15); samples to reach 0.5: rank-1 " + fmt(t1) +
             ", rank-4 " + fmt(t4) + " (" + fmt(crossing_trials) + " trials)");
  CHECK(slope_ok);
  CHECK(mono_ok);
}

TEST_CASE("criterion 8: bias demonstration") {
  BiasDemoReport rep = run_bias_demo(4, 2, 100000, 8808);
  bool biased_ok = std::abs(rep.biased_mean - rep.predicted_factor) <= 5 * rep.biased_se;
  bool unbiased_ok = std::abs(rep.unbiased_mean - 1.0) <= 5 * rep.unbiased_se;
  bool pass = biased_ok && unbiased_ok;
  report(8, "bias demonstration", pass,
         "biased " + fmt(rep.biased_mean) + " +- " + fmt(rep.biased_se) + " vs predicted " +
             fmt(rep.predicted_factor) + "; unbiased " + fmt(rep.unbiased_mean) + " +- " +
             fmt(rep.unbiased_se) + " vs 1");
  CHECK(biased_ok);
  CHECK(unbiased_ok);
}

TEST_CASE("criterion 9: snapshot operator-norm bound") {
  EnsembleSpec spec(EnsembleKind::BrickworkPBC, 4, 2);
  ChannelSpectrum spectrum(spec);
  RngStream rng(8909);
  DensityMatrix rho = random_rank_r_state(4, 4, rng);
  double worst_norm = 0, worst_trace = 0;
  for_each_snapshot(rho, spec, 1000, 8910, 0, [&](std::size_t, const Snapshot& s) {
    Eigen::MatrixXcd m = snapshot_to_matrix(s, spectrum);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
    worst_norm = std::max(worst_norm, es.eigenvalues().cwiseAbs().maxCoeff());
    worst_trace = std::max(worst_trace, std::abs(m.trace().real() - 1.0) +
                                            std::abs(m.trace().imag()));
  });
  bool norm_ok = worst_norm <= 25.0;
  bool trace_ok = worst_trace <= 1e-10;
  bool pass = norm_ok && trace_ok;
  report(9, "snapshot operator norm", pass,
         "max opnorm " + fmt(worst_norm) + " (bound 25); max trace deviation " + fmt(worst_trace));
  CHECK(norm_ok);
  CHECK(trace_ok);
}
