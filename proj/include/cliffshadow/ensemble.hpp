#pragma once

#include <string>
#include <vector>

#include "cliffshadow/pauli.hpp"
#include "cliffshadow/rng.hpp"
#include "cliffshadow/tableau.hpp"

namespace cliffshadow {

enum class EnsembleKind {
  Block,               // independent uniform Cl(k) on n/k aligned blocks
  BrickworkPBC,        // two staggered layers, wrap block on the boundary
  BrickworkObcU2Split, // open boundary, staggered layer's edge blocks split in two Cl(k/2)
  BrickworkObcU1Split, // open boundary, first layer staggered and edge-split, second aligned
  MubProduct,          // deterministic product of per-block mutually unbiased bases
};

std::string to_string(EnsembleKind kind);
EnsembleKind ensemble_kind_from_string(const std::string& s);

/// Descriptor of a measurement ensemble.
struct EnsembleSpec {
  EnsembleKind kind;
  std::size_t n_qubits;
  std::size_t k;

  EnsembleSpec(EnsembleKind kind_, std::size_t n, std::size_t k_);

  std::size_t num_blocks() const { return n_qubits / k; }
  bool is_brickwork() const {
    return kind == EnsembleKind::BrickworkPBC || kind == EnsembleKind::BrickworkObcU2Split ||
           kind == EnsembleKind::BrickworkObcU1Split;
  }

  /// Partition of the first unitary layer (also the only layer for Block).
  BlockPartition layer1_partition() const;
  /// Partition of the second layer; only valid for brickwork kinds.
  BlockPartition layer2_partition() const;
};

/// One draw of the ensemble unitary.  MubProduct is deterministic (indexed
/// bases, not sampled) and is rejected here.
CliffordTableau sample_ensemble(const EnsembleSpec& spec, RngStream& rng);

/// The 2^k + 1 mutually unbiased stabilizer bases on k qubits: the sets
/// {C^dag Z C : Z a nontrivial Z-string} partition the 4^k - 1 nontrivial
/// Paulis into disjoint commuting classes.  Supported for k in {1, 2}.
std::vector<CliffordTableau> mub_bases(std::size_t k);

/// Unsigned stabilizer class of a basis tableau: the 2^k - 1 Paulis that the
/// basis diagonalizes.
std::vector<PauliString> basis_stabilizer_class(const CliffordTableau& basis);

}  // namespace cliffshadow
