#pragma once

#include <vector>

#include <Eigen/Dense>

#include "cliffshadow/bounds.hpp"
#include "cliffshadow/density_matrix.hpp"
#include "cliffshadow/ensemble.hpp"
#include "cliffshadow/rat_matrix.hpp"

namespace cliffshadow {

// Brute-force counterparts of the closed forms.  These deliberately share
// no code with the quantities they check.

/// Sub-block-pattern sums of the pair correlation over all 4^k x 4^k
/// Pauli pairs; entry (a, b) sums tau over pairs that agree (0) or differ
/// (1) on the left and right half-block.
struct PatternSums {
  Rational entry[2][2];
};
PatternSums g_entries_bruteforce(std::size_t k);

/// Ring sum over all 2^(2m) sub-block configurations of alternating F/G
/// factors; equals Tr((FG)^m) when the factorization is correct.
Rational config_sum_bruteforce(const Rat2x2& f, const Rat2x2& g, std::size_t m);

/// Direct enumeration of sum_P 1/N_P over all 4^n Paulis.
Rational sum_inv_NP_bruteforce(std::size_t n, std::size_t k);

/// Direct enumeration of sum 1/N_P^2 over the Paulis actionable for one
/// concrete product basis.
Rational sum_inv_NP_sq_per_basis_bruteforce(std::size_t n, std::size_t k);

/// Tr(K_{t_1} ... K_{t_m}) for one support pattern.
Rational k_contraction(std::size_t k, const std::vector<bool>& pattern);

/// True iff the all-ones pattern minimizes the contraction over every
/// pattern of length m.
bool k_contraction_min_at_all_ones(std::size_t k, std::size_t m);

/// Exhaustive shadow-channel application for the single-qubit block
/// ensemble on n <= 2 qubits: averages the measure-and-reconstruct map
/// over all 24^n unitaries and all outcomes.
Eigen::MatrixXcd exhaustive_channel_apply_block_k1(const PauliString& p);

/// Exact expectation of the mean estimator for the k=1 block ensemble,
/// averaging over all unitaries and Born-weighted outcomes.
Eigen::MatrixXcd exhaustive_mean_estimator_block_k1(const DensityMatrix& rho);

/// Exact expectation of the MUB estimator (all bases, Born-weighted
/// outcomes).
Eigen::MatrixXcd exhaustive_mub_expectation(const DensityMatrix& rho, std::size_t k);

}  // namespace cliffshadow
