#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cliffshadow/bitvec.hpp"

namespace cliffshadow {

/// Signed n-qubit Pauli operator in symplectic bit representation.
///
/// The operator is  sign * prod_q P(x_q, z_q)  with the Hermitian per-qubit
/// convention P(0,0)=I, P(1,0)=X, P(0,1)=Z, P(1,1)=Y.  Only signs +1/-1 are
/// representable; imaginary phases arise transiently in products and are
/// reported through PauliProduct::i_power instead of being stored here.
///
/// Qubit 0 is the leftmost tensor factor and the most significant bit of
/// basis-state indices and outcome bitstrings.
class PauliString {
public:
  explicit PauliString(std::size_t n_qubits)
      : n_(n_qubits), x_(n_qubits), z_(n_qubits), negative_(false) {}
  PauliString(std::size_t n_qubits, BitVec x, BitVec z, bool negative);

  static PauliString identity(std::size_t n) { return PauliString(n); }
  /// Z-string whose bits are given MSB-first as an integer index.
  static PauliString z_string(std::size_t n, std::uint64_t z_index);
  static PauliString single(std::size_t n, std::size_t qubit, char axis);
  static PauliString parse(const std::string& text);

  std::size_t n_qubits() const { return n_; }
  bool x_bit(std::size_t q) const { return x_.get(q); }
  bool z_bit(std::size_t q) const { return z_.get(q); }
  const BitVec& x_bits() const { return x_; }
  const BitVec& z_bits() const { return z_; }
  int sign() const { return negative_ ? -1 : +1; }
  bool is_negative() const { return negative_; }

  PauliString with_sign(bool negative) const;
  PauliString negated() const { return with_sign(!negative_); }

  bool is_identity() const { return !x_.any() && !z_.any(); }
  /// True iff the unsigned part lies in {I,Z}^n.
  bool is_z_string() const { return !x_.any(); }

  /// Index form of the z bits (qubit 0 = MSB); only valid for n <= 64.
  std::uint64_t z_index() const;
  std::uint64_t x_index() const;

  /// Number of qubits with X or Z support.
  std::size_t weight() const;

  char axis_at(std::size_t q) const;

  std::string to_string() const;

  bool equals_up_to_sign(const PauliString& o) const { return x_ == o.x_ && z_ == o.z_; }
  bool operator==(const PauliString& o) const {
    return n_ == o.n_ && negative_ == o.negative_ && x_ == o.x_ && z_ == o.z_;
  }
  bool operator!=(const PauliString& o) const { return !(*this == o); }

  std::uint64_t hash() const;

private:
  std::size_t n_;
  BitVec x_;
  BitVec z_;
  bool negative_;
};

/// Result of a Pauli product: full product = i^i_power * pauli, where
/// pauli carries sign +1 and i_power is reduced mod 4.
struct PauliProduct {
  PauliString pauli;
  int i_power;

  bool is_hermitian() const { return (i_power % 2) == 0; }
  /// Collapse onto a signed Pauli; throws when the phase is imaginary.
  PauliString hermitian() const;
};

PauliProduct multiply_with_phase(const PauliString& a, const PauliString& b);

/// Hermitian-only product; errors on anticommuting inputs where the group
/// product picks up a factor of +/- i.
PauliString multiply(const PauliString& a, const PauliString& b);

bool commutes(const PauliString& a, const PauliString& b);

/// Partition of [n] into contiguous blocks of size k, optionally staggered
/// by k/2.  With the staggered offset the wrap block is {n-k/2 .. n-1, 0 ..
/// k/2-1} under periodic boundary; under the open boundary the two edge
/// half-blocks are kept as separate size-k/2 blocks.
struct BlockPartition {
  enum class Boundary { Periodic, OpenSplit };

  std::size_t n_qubits;
  std::size_t k;
  std::size_t offset;  // 0 or k/2
  Boundary boundary = Boundary::Periodic;

  BlockPartition(std::size_t n, std::size_t block_size, std::size_t off = 0,
                 Boundary bc = Boundary::Periodic);

  std::vector<std::vector<std::size_t>> blocks() const;
};

/// Number of partition blocks on which p acts nontrivially.
std::size_t block_weight(const PauliString& p, const BlockPartition& part);

/// Sub-Pauli on the listed qubits (in the given order), sign +1.
PauliString restrict_to(const PauliString& p, const std::vector<std::size_t>& qubits);

constexpr std::size_t kDefaultDenseLimit = 10;

/// Literal 2^n x 2^n matrix of the operator.
Eigen::MatrixXcd pauli_to_dense(const PauliString& p, std::size_t dense_limit = kDefaultDenseLimit);

}  // namespace cliffshadow
