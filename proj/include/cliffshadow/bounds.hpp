#pragma once

#include <cstdint>
#include <string>

#include "cliffshadow/rat_matrix.hpp"
#include "cliffshadow/rational.hpp"

namespace cliffshadow {

/// Sub-block transfer matrices of the second-moment bound.  Indices are
/// configuration labels: 0 = the two Paulis agree on the sub-block, 1 =
/// they differ.
struct TransferPair {
  Rat2x2 F;
  Rat2x2 G;
  std::size_t k;
};

/// Open-boundary replacements for one edge factor.
struct ObcPair {
  Rat2x2 F_tilde;
  Rat2x2 G_tilde;
  std::size_t k;
};

/// Occupancy transfer matrices of the exact brickwork channel eigenvalue.
struct KPair {
  Rat2x2 K0;
  Rat2x2 K1;
  std::size_t k;
};

TransferPair build_transfer(std::size_t k);
ObcPair build_obc(std::size_t k);
KPair build_K(std::size_t k);

/// Eigenvalues of F*G: closed form and the quadratic eigensolve agree to
/// floating precision.
struct EigenPairD {
  double plus;
  double minus;
};
EigenPairD lambda_pm(std::size_t k);
EigenPairD lambda_pm_eigensolve(std::size_t k);

EigenPairD mu_pm(std::size_t k);
EigenPairD mu_pm_eigensolve(std::size_t k);

/// min over Paulis of the brickwork channel eigenvalue: Tr(K1^(n/k)).
Rational min_mp(std::size_t n, std::size_t k);

/// Periodic-boundary second-moment bound (1+1/2^k)^{2m} (l+^m + l-^m).
double variance_bound_pbc(std::size_t n, std::size_t k);

enum class ObcVariant { U2Split, U1Split };

struct ObcBound {
  double h;            // Tr((FG)^{m-1} X)
  double h_closed;     // alpha+ l+^{m-1} + alpha- l-^{m-1}
  double alpha_plus;
  double alpha_minus;
  double trace_x;
  double bound;        // (1+1/2^k)^{2m} h
};
ObcBound variance_bound_obc(std::size_t n, std::size_t k, ObcVariant variant);

/// Edge-trace closed forms as stated: 2^{k+1} and
/// (2^k/(2^k+1)) (2^k + 4*2^{k/2} + 3).
double trace_fg_tilde_closed(std::size_t k);
double trace_ftilde_g_closed(std::size_t k);

/// sum over all Paulis of 1/N_P and the per-basis sum of 1/N_P^2.
Rational sum_inv_NP(std::size_t n, std::size_t k);
Rational sum_inv_NP_sq_per_basis(std::size_t n, std::size_t k);

/// Frobenius variance factor A(n,k) = ((4^k+2^k-1)/(2^k+1))^{n/k}.
Rational variance_amplification(std::size_t n, std::size_t k);

enum class TheoremKind { Thm1RankR, Thm2FullRank, AppFTwoLayer };

TheoremKind theorem_kind_from_string(const std::string& s);
std::string to_string(TheoremKind t);

struct SampleComplexity {
  TheoremKind theorem;
  std::size_t n = 0, k = 0, r = 0;
  double eps_tr = 0, delta = 0;
  double samples = 0;          // explicit count before rounding
  std::uint64_t samples_ceil = 0;
  // components (zero when not applicable)
  double lambda_plus = 0, lambda_minus = 0;
  double sigma_sq = 0, op_norm_R = 0, eps_op = 0;
  double amplification = 0, shots_per_basis = 0, basis_count = 0;
  double max_inv_eigenvalue = 0, num_unitaries = 0, shots_per_unitary = 0;
  bool assumption_rankr = false;   // k 2^{k/2} >= n
  bool assumption_fullrank = false;  // k 2^k >= n
};

/// Explicit sample counts with all stated constants retained; the rank-r
/// route inverts the matrix-concentration tail directly.
SampleComplexity sample_complexity(TheoremKind theorem, std::size_t n, std::size_t k,
                                   std::size_t r, double eps_tr, double delta);

}  // namespace cliffshadow
