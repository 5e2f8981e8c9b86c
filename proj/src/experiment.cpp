#include "cliffshadow/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cliffshadow/estimators.hpp"

namespace cliffshadow {

std::string to_string(EstimatorKind kind) {
  switch (kind) {
    case EstimatorKind::Shadow: return "shadow";
    case EstimatorKind::Mub: return "mub";
    case EstimatorKind::TwoLayer: return "two-layer";
  }
  throw std::logic_error("to_string: unknown estimator kind");
}

EstimatorKind estimator_kind_from_string(const std::string& s) {
  if (s == "shadow") return EstimatorKind::Shadow;
  if (s == "mub") return EstimatorKind::Mub;
  if (s == "two-layer") return EstimatorKind::TwoLayer;
  throw std::invalid_argument("unknown estimator kind: " + s);
}

void ExperimentConfig::validate() const {
  EnsembleSpec spec(ensemble, n, k);  // checks divisibility and parity
  if (n > dense_limit)
    throw std::invalid_argument("ExperimentConfig: n exceeds the dense limit");
  if (rank < 1 || rank > (std::size_t(1) << n))
    throw std::invalid_argument("ExperimentConfig: rank out of range");
  if (trials < 1) throw std::invalid_argument("ExperimentConfig: need at least one trial");
  if (threads < 1) throw std::invalid_argument("ExperimentConfig: need at least one thread");

  switch (estimator) {
    case EstimatorKind::Shadow:
      if (ensemble == EnsembleKind::MubProduct)
        throw std::invalid_argument("ExperimentConfig: shadow estimator needs a sampled ensemble");
      if (schedule.empty())
        throw std::invalid_argument("ExperimentConfig: empty sample schedule");
      for (std::size_t i = 0; i < schedule.size(); ++i) {
        if (schedule[i] == 0)
          throw std::invalid_argument("ExperimentConfig: schedule entries must be positive");
        if (i > 0 && schedule[i] <= schedule[i - 1])
          throw std::invalid_argument("ExperimentConfig: schedule must be strictly increasing");
      }
      break;
    case EstimatorKind::Mub:
      if (ensemble != EnsembleKind::MubProduct)
        throw std::invalid_argument("ExperimentConfig: mub estimator requires the mub-product ensemble");
      if (k != 1 && k != 2)
        throw std::invalid_argument("ExperimentConfig: mub bases support k in {1,2}");
      if (schedule.empty())
        throw std::invalid_argument("ExperimentConfig: empty shots-per-basis schedule");
      for (std::size_t m : schedule) {
        if (m == 0) throw std::invalid_argument("ExperimentConfig: shots per basis must be positive");
      }
      break;
    case EstimatorKind::TwoLayer:
      if (!spec.is_brickwork())
        throw std::invalid_argument("ExperimentConfig: two-layer estimator requires a brickwork ensemble");
      if (num_unitaries < 1 || shots_per_unitary < 1)
        throw std::invalid_argument("ExperimentConfig: two-layer shape must be positive");
      break;
  }
}

namespace {

std::uint64_t trial_seed(std::uint64_t master, std::size_t trial) {
  return splitmix64(splitmix64(master) ^ (0x7f4a7c15ull + trial));
}

constexpr std::uint64_t kStateStream = 0xffffffffull;

std::vector<ResultRow> run_trial(const ExperimentConfig& cfg, std::size_t trial) {
  auto t0 = std::chrono::steady_clock::now();
  std::uint64_t seed = trial_seed(cfg.seed, trial);
  RngStream state_rng(seed, kStateStream);
  DensityMatrix rho = random_rank_r_state(cfg.n, cfg.rank, state_rng, cfg.dense_limit);
  EnsembleSpec spec(cfg.ensemble, cfg.n, cfg.k);
  std::uint64_t d = std::uint64_t(1) << cfg.n;

  std::vector<ResultRow> rows;
  auto wall_ms = [&t0] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  };
  auto push = [&](std::size_t samples, const Eigen::MatrixXcd& estimate) {
    ResultRow row;
    row.trial = trial;
    row.samples = samples;
    row.trace_dist = trace_distance(estimate, rho.matrix());
    row.frobenius_dist = frobenius_distance(estimate, rho.matrix());
    row.opnorm_dist = opnorm_distance(estimate, rho.matrix());
    row.wall_ms = wall_ms();
    row.row_seed = seed;
    rows.push_back(row);
  };

  switch (cfg.estimator) {
    case EstimatorKind::Shadow: {
      ChannelSpectrum spectrum(spec);
      Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(d, d);
      std::size_t next = 0;
      for_each_snapshot(rho, spec, cfg.schedule.back(), seed, 0,
                        [&](std::size_t i, const Snapshot& s) {
                          sum += snapshot_to_matrix(s, spectrum);
                          if (next < cfg.schedule.size() && i + 1 == cfg.schedule[next]) {
                            push(i + 1, sum / static_cast<double>(i + 1));
                            ++next;
                          }
                        });
      break;
    }
    case EstimatorKind::Mub: {
      std::size_t bases = 1;
      for (std::size_t i = 0; i < cfg.n / cfg.k; ++i) bases *= (std::size_t(1) << cfg.k) + 1;
      for (std::size_t idx = 0; idx < cfg.schedule.size(); ++idx) {
        std::size_t shots = cfg.schedule[idx];
        MubDataset ds = mub_collect(rho, cfg.n, cfg.k, shots, splitmix64(seed ^ (idx + 1)));
        push(shots * bases, mub_estimator(ds));
      }
      break;
    }
    case EstimatorKind::TwoLayer: {
      Eigen::MatrixXcd est = two_layer_fullrank_estimator(rho, spec, cfg.num_unitaries,
                                                          cfg.shots_per_unitary, seed);
      push(cfg.num_unitaries * cfg.shots_per_unitary, est);
      break;
    }
  }
  return rows;
}

}  // namespace

std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  std::vector<std::vector<ResultRow>> per_trial(cfg.trials);

  if (cfg.threads == 1 || cfg.trials == 1) {
    for (std::size_t t = 0; t < cfg.trials; ++t) per_trial[t] = run_trial(cfg, t);
  } else {
    std::atomic<std::size_t> counter{0};
    std::size_t workers = std::min(cfg.threads, cfg.trials);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          std::size_t t = counter.fetch_add(1);
          if (t >= cfg.trials) return;
          per_trial[t] = run_trial(cfg, t);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  std::vector<ResultRow> rows;
  for (auto& trial_rows : per_trial) {
    for (auto& row : trial_rows) rows.push_back(row);
  }
  return rows;
}

std::string experiment_csv(const ExperimentConfig& cfg, const std::vector<ResultRow>& rows) {
  std::ostringstream os;
  os << "# cliffshadow-csv-v1 simulate n=" << cfg.n << " k=" << cfg.k << " rank=" << cfg.rank
     << " ensemble=" << to_string(cfg.ensemble) << " estimator=" << to_string(cfg.estimator)
     << " trials=" << cfg.trials << " seed=" << cfg.seed << " schedule=";
  if (cfg.estimator == EstimatorKind::TwoLayer) {
    os << cfg.num_unitaries << "x" << cfg.shots_per_unitary;
  } else {
    for (std::size_t i = 0; i < cfg.schedule.size(); ++i) {
      if (i > 0) os << ",";
      os << cfg.schedule[i];
    }
  }
  os << "\n";
  os << "trial,samples,trace_dist,frobenius_dist,opnorm_dist,row_seed";
  if (cfg.timing) os << ",wall_ms";
  os << "\n";
  char buf[96];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%zu,%zu,%.17g,%.17g,%.17g,%llu", r.trial, r.samples,
                  r.trace_dist, r.frobenius_dist, r.opnorm_dist,
                  static_cast<unsigned long long>(r.row_seed));
    os << buf;
    if (cfg.timing) {
      std::snprintf(buf, sizeof buf, ",%.3f", r.wall_ms);
      os << buf;
    }
    os << "\n";
  }
  return os.str();
}

BiasDemoReport run_bias_demo(std::size_t n, std::size_t k, std::size_t samples,
                             std::uint64_t seed) {
  EnsembleSpec spec(EnsembleKind::BrickworkPBC, n, k);
  ChannelSpectrum spectrum(spec);
  DensityMatrix rho = DensityMatrix::basis_state(n, 0);
  PauliString probe = PauliString::single(n, 0, 'Z');
  double d = static_cast<double>(std::uint64_t(1) << n);
  double m_probe = spectrum.eigenvalue_double(probe);
  double inv_probe = spectrum.inverse_coefficient(probe);

  double b_acc = 0, b_sq = 0, u_acc = 0, u_sq = 0;
  for_each_snapshot(rho, spec, samples, seed, 0, [&](std::size_t, const Snapshot& s) {
    double raw = snapshot_pauli_readout(s, probe);
    double biased = (d + 1) * raw;
    double unbiased = inv_probe * raw;
    b_acc += biased;
    b_sq += biased * biased;
    u_acc += unbiased;
    u_sq += unbiased * unbiased;
  });

  BiasDemoReport rep;
  rep.n = n;
  rep.k = k;
  rep.samples = samples;
  rep.true_expectation = pauli_expectation(rho, probe);
  rep.predicted_factor = (d + 1) * m_probe;
  rep.biased_mean = b_acc / samples;
  rep.biased_se = std::sqrt(std::max(b_sq / samples - rep.biased_mean * rep.biased_mean, 0.0) /
                            samples);
  rep.unbiased_mean = u_acc / samples;
  rep.unbiased_se =
      std::sqrt(std::max(u_sq / samples - rep.unbiased_mean * rep.unbiased_mean, 0.0) / samples);
  return rep;
}

std::string BiasDemoReport::to_text() const {
  std::ostringstream os;
  os.precision(6);
  os << "bias demo: n=" << n << " k=" << k << " samples=" << samples << "\n"
     << "  probe expectation tr(rho P)      : " << true_expectation << "\n"
     << "  predicted global-inverse factor  : " << predicted_factor << "\n"
     << "  biased estimate   (mean +- se)   : " << biased_mean << " +- " << biased_se << "\n"
     << "  unbiased estimate (mean +- se)   : " << unbiased_mean << " +- " << unbiased_se << "\n";
  return os.str();
}

}  // namespace cliffshadow
