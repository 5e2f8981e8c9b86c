#pragma once

#include <cstdint>
#include <string>

#include <Eigen/Dense>

#include "cliffshadow/pauli.hpp"
#include "cliffshadow/rng.hpp"
#include "cliffshadow/tableau.hpp"

namespace cliffshadow {

/// Computational-basis measurement outcome; qubit 0 is the most
/// significant bit of the index form.
struct Outcome {
  BitVec bits;

  explicit Outcome(std::size_t n) : bits(n) {}
  static Outcome from_index(std::size_t n, std::uint64_t index);

  std::size_t n_qubits() const { return bits.size(); }
  std::uint64_t index() const;
  bool bit(std::size_t q) const { return bits.get(q); }
  std::string to_string() const;
  static Outcome parse(const std::string& s);

  bool operator==(const Outcome& o) const { return bits == o.bits; }
};

/// Dense Hermitian, PSD, unit-trace matrix on n qubits.
class DensityMatrix {
public:
  DensityMatrix(std::size_t n, Eigen::MatrixXcd m);

  static DensityMatrix basis_state(std::size_t n, std::uint64_t index);
  static DensityMatrix maximally_mixed(std::size_t n);

  std::size_t n_qubits() const { return n_; }
  std::size_t dim() const { return std::size_t(1) << n_; }
  const Eigen::MatrixXcd& matrix() const { return m_; }

  /// Enforces the state invariants; throws when violated.
  void validate(double tol = 1e-10) const;

  double purity() const { return (m_ * m_).trace().real(); }

  std::string to_text() const;
  static DensityMatrix from_text(const std::string& text);

private:
  std::size_t n_;
  Eigen::MatrixXcd m_;
};

/// Ginibre-induced random state of exact rank r: G G^dag / Tr(G G^dag)
/// with G a 2^n x r complex Gaussian matrix.
DensityMatrix random_rank_r_state(std::size_t n, std::size_t r, RngStream& rng,
                                  std::size_t dense_limit = kDefaultDenseLimit);

/// U rho U^dag through Pauli-basis conjugation (exact tableau signs).
DensityMatrix apply_clifford_pauli_basis(const DensityMatrix& rho, const CliffordTableau& c);
/// U rho U^dag through the dense unitary.
DensityMatrix apply_clifford_dense(const DensityMatrix& rho, const CliffordTableau& c);
/// Default path: Pauli-basis conjugation for small n, dense beyond.
DensityMatrix apply_clifford(const DensityMatrix& rho, const CliffordTableau& c);

/// Computational-basis sample with probabilities diag(rho).
Outcome born_sample(const DensityMatrix& rho, RngStream& rng);

/// Diagonal probabilities, clipped at zero; errors when the clipped mass
/// exceeds 1e-8 or the diagonal mass strays from 1 beyond 1e-6.
Eigen::VectorXd born_probabilities(const DensityMatrix& rho);

/// Unnormalized trace norm sum_i |eig_i(a - b)|; requires a Hermitian
/// difference.
double trace_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);
double frobenius_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);
double opnorm_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

double pauli_expectation(const DensityMatrix& rho, const PauliString& p);
double pauli_expectation(const Eigen::MatrixXcd& m, const PauliString& p);

/// Row-major "re im" text with an n header; the common serialization for
/// states and estimator outputs.  Round-trips exactly at full precision.
std::string complex_matrix_to_text(std::size_t n, const Eigen::MatrixXcd& m);
std::pair<std::size_t, Eigen::MatrixXcd> complex_matrix_from_text(const std::string& text);

}  // namespace cliffshadow
