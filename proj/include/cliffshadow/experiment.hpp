#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cliffshadow/ensemble.hpp"

namespace cliffshadow {

enum class EstimatorKind { Shadow, Mub, TwoLayer };

std::string to_string(EstimatorKind kind);
EstimatorKind estimator_kind_from_string(const std::string& s);

/// One end-to-end tomography experiment: draw states, collect measurement
/// data, reconstruct, and record distances at every scheduled sample count.
struct ExperimentConfig {
  std::size_t n = 4;
  std::size_t k = 2;
  std::size_t rank = 1;
  EnsembleKind ensemble = EnsembleKind::BrickworkPBC;
  EstimatorKind estimator = EstimatorKind::Shadow;
  /// Snapshot-count checkpoints (shadow) or shots-per-basis values (mub).
  std::vector<std::size_t> schedule;
  /// Two-layer estimator shape; samples consumed = num_unitaries * shots.
  std::size_t num_unitaries = 0;
  std::size_t shots_per_unitary = 0;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  std::size_t dense_limit = 10;
  std::size_t threads = 1;
  /// Adds a wall-clock column; off by default so equal configs produce
  /// byte-identical CSV.
  bool timing = false;

  void validate() const;
};

struct ResultRow {
  std::size_t trial;
  std::size_t samples;
  double trace_dist;
  double frobenius_dist;
  double opnorm_dist;
  double wall_ms;
  std::uint64_t row_seed;
};

/// Deterministic per (config, seed); trials parallelize over threads with
/// per-trial streams and rows come back ordered by (trial, checkpoint).
std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg);

/// Versioned CSV with a header comment echoing the config.
std::string experiment_csv(const ExperimentConfig& cfg, const std::vector<ResultRow>& rows);

struct BiasDemoReport {
  std::size_t n, k;
  std::size_t samples;
  double true_expectation;       // tr(rho P) for the probe Pauli
  double predicted_factor;       // (d+1) m_P
  double biased_mean, biased_se;
  double unbiased_mean, unbiased_se;

  std::string to_text() const;
};

/// Side-by-side estimate of one single-qubit Pauli through the exact
/// channel inverse and through the global-inverse shortcut, on |0...0>.
BiasDemoReport run_bias_demo(std::size_t n, std::size_t k, std::size_t samples,
                             std::uint64_t seed);

}  // namespace cliffshadow
