#pragma once

#include "cliffshadow/ensemble.hpp"
#include "cliffshadow/pauli.hpp"
#include "cliffshadow/rat_matrix.hpp"
#include "cliffshadow/rational.hpp"
#include "cliffshadow/rng.hpp"

namespace cliffshadow {

/// Probability that a uniform block-ensemble unitary maps p into a signed
/// Z-string: (2^k + 1)^(-w) with w the number of blocks hit.
Rational m_block(const PauliString& p, std::size_t k);

/// Exact eigenvalue for the two-layer brickwork ensembles.  Within each
/// first-layer block that p touches, the conjugate is uniform over the
/// 4^k - 1 nontrivial block Paulis, which fixes the joint law of the two
/// half-block supports; the staggered second layer then contributes one
/// coupling factor per block.  The result is a 2x2 rational transfer
/// contraction over half-block occupancies.
Rational m_brickwork(const PauliString& p, const EnsembleSpec& spec);

/// Dispatch on the ensemble kind (MUB product bases share the block value).
Rational channel_eigenvalue(const PauliString& p, const EnsembleSpec& spec);

/// Occupancy weight matrices of the brickwork contraction, exposed so the
/// hardcoded K-matrix oracle can cross-check the derivation route.
Rat2x2 brickwork_weight_matrix(std::size_t k, bool block_nontrivial);
Rat2x2 brickwork_coupling_matrix(std::size_t k);

/// Pauli correlation for the full Clifford group on p's system size.
Rational tau_full(const PauliString& p, const PauliString& q);

/// Blockwise product of per-block full-group correlations; split blocks use
/// their own (smaller) group size.
Rational tau_block(const PauliString& p, const PauliString& q, const BlockPartition& part);

/// Exact eigenvalue from the block support pattern alone; pattern bit i
/// refers to the i-th block of the first-layer partition.
Rational channel_eigenvalue_for_pattern(const EnsembleSpec& spec, std::uint64_t pattern);

/// Evaluator bundle for one ensemble.  Immutable and cheap to share; the
/// eigenvalues only depend on the block support pattern, so they are
/// tabulated once up front.
class ChannelSpectrum {
public:
  explicit ChannelSpectrum(EnsembleSpec spec);

  const EnsembleSpec& spec() const { return spec_; }

  Rational eigenvalue(const PauliString& p) const { return channel_eigenvalue(p, spec_); }
  double eigenvalue_double(const PauliString& p) const;

  /// 1 / m_P; reports a non-invertible channel instead of dividing by zero.
  double inverse_coefficient(const PauliString& p) const;

private:
  EnsembleSpec spec_;
  std::vector<std::vector<std::size_t>> pattern_blocks_;
  std::vector<double> value_by_pattern_;
  std::vector<double> inverse_by_pattern_;

  std::uint64_t pattern_of(const PauliString& p) const;
};

struct MonteCarloEstimate {
  double estimate;
  double std_error;
  std::size_t samples;
};

/// Empirical frequency of conjugation into a signed Z-string.
MonteCarloEstimate monte_carlo_m(const EnsembleSpec& spec, const PauliString& p,
                                 std::size_t samples, RngStream& rng);

/// Joint frequency that both p and q conjugate into signed Z-strings under
/// one layer of independent block Cliffords on the given partition.
MonteCarloEstimate monte_carlo_tau(const BlockPartition& layer, const PauliString& p,
                                   const PauliString& q, std::size_t samples, RngStream& rng);

}  // namespace cliffshadow
