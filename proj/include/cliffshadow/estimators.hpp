#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cliffshadow/channel.hpp"
#include "cliffshadow/density_matrix.hpp"
#include "cliffshadow/ensemble.hpp"
#include "cliffshadow/tableau.hpp"

namespace cliffshadow {

/// One (unitary, outcome) measurement record.
struct Snapshot {
  CliffordTableau unitary;
  Outcome outcome;
  EnsembleSpec spec;

  Snapshot(CliffordTableau u, Outcome b, EnsembleSpec s);
};

/// Ordered, spec-homogeneous collection of snapshots.
class SnapshotSet {
public:
  SnapshotSet(EnsembleSpec spec, std::uint64_t master_seed)
      : spec_(std::move(spec)), master_seed_(master_seed) {}

  const EnsembleSpec& spec() const { return spec_; }
  std::uint64_t master_seed() const { return master_seed_; }
  const std::vector<Snapshot>& snapshots() const { return snapshots_; }
  std::size_t size() const { return snapshots_.size(); }
  bool empty() const { return snapshots_.empty(); }

  void add(Snapshot s);

  std::string to_text() const;
  static SnapshotSet from_text(const std::string& text);

private:
  EnsembleSpec spec_;
  std::uint64_t master_seed_;
  std::vector<Snapshot> snapshots_;
};

/// count i.i.d. snapshots of rho: sample U, rotate, Born-sample the
/// outcome.  Snapshot i consumes the stream (master_seed, stream_offset+i),
/// so any partitioning over workers reproduces the same records.
SnapshotSet collect_snapshots(const DensityMatrix& rho, const EnsembleSpec& spec,
                              std::size_t count, std::uint64_t master_seed,
                              std::uint64_t stream_offset = 0);

/// Streaming variant; fn(i, snapshot) is called in index order.
void for_each_snapshot(const DensityMatrix& rho, const EnsembleSpec& spec, std::size_t count,
                       std::uint64_t master_seed, std::uint64_t stream_offset,
                       const std::function<void(std::size_t, const Snapshot&)>& fn);

/// Unbiased snapshot matrix: (1/2^n) sum over Z-string preimages of the
/// basis projector, each rescaled by the inverse channel eigenvalue.
Eigen::MatrixXcd snapshot_to_matrix(const Snapshot& s, const ChannelSpectrum& spectrum);

/// Block-ensemble tensor shortcut: per block (2^k+1) |phi><phi| - I with
/// |phi> the back-rotated outcome state.  Must agree with the generic path.
Eigen::MatrixXcd snapshot_to_matrix_block_product(const Snapshot& s);

/// Arithmetic mean of the snapshot matrices.
Eigen::MatrixXcd mean_estimator(const SnapshotSet& set, const ChannelSpectrum& spectrum);

/// tr(P * snapshot matrix) without building the matrix; zero unless the
/// conjugated Pauli is a signed Z-string.
double snapshot_pauli_readout(const Snapshot& s, const PauliString& p);

// ---- full-rank estimator over exhaustive product MUBs ----

/// Shots collected in one product basis (one MUB index per block).
struct MubRecord {
  std::vector<std::size_t> basis_index;
  std::vector<Outcome> outcomes;
};

struct MubDataset {
  std::size_t n_qubits = 0;
  std::size_t k = 0;
  std::size_t shots_per_basis = 0;
  std::uint64_t master_seed = 0;
  std::vector<MubRecord> records;

  std::size_t basis_count() const { return records.size(); }
  std::size_t total_samples() const { return records.size() * shots_per_basis; }
};

/// (2^k+1)^(n/k - w): number of product bases that diagonalize a Pauli of
/// block weight w.
std::uint64_t actionable_basis_count(std::size_t n, std::size_t k, std::size_t w);

/// Collects shots_per_basis outcomes in every one of the (2^k+1)^(n/k)
/// product bases, enumerated lexicographically by per-block index.
MubDataset mub_collect(const DensityMatrix& rho, std::size_t n, std::size_t k,
                       std::size_t shots_per_basis, std::uint64_t master_seed);

/// Assembles sum_P mu_P P / (2^n M N_P) from the +-1 readouts of the
/// actionable bases.
Eigen::MatrixXcd mub_estimator(const MubDataset& dataset);

/// Build the product-basis tableau for one index vector.
CliffordTableau mub_product_tableau(std::size_t n, std::size_t k,
                                    const std::vector<std::size_t>& basis_index);

// ---- two-layer full-rank estimator ----

/// Mean over num_unitaries of per-unitary shot-averaged snapshot matrices
/// with the exact brickwork channel inverse.
Eigen::MatrixXcd two_layer_fullrank_estimator(const DensityMatrix& rho, const EnsembleSpec& spec,
                                              std::size_t num_unitaries, std::size_t shots_per_unitary,
                                              std::uint64_t master_seed);

// ---- biased global-inverse estimator ----

/// (d+1) U^dag |b><b| U - I: the global-channel inverse applied to a
/// shallow-circuit snapshot.  Biased unless the ensemble is the full
/// Clifford group.
Eigen::MatrixXcd biased_haar_estimator(const Snapshot& s);

/// tr(P * biased estimator) from tableau data alone.
double biased_haar_pauli_readout(const Snapshot& s, const PauliString& p);

}  // namespace cliffshadow
