#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cliffshadow/pauli.hpp"

namespace cliffshadow {

/// Clifford unitary represented by its conjugation action: row j holds
/// U X_j U^dag for j < n and U Z_{j-n} U^dag for j >= n, each a signed
/// Pauli.  The 2n x 2n bit matrix formed by the rows preserves the
/// symplectic form; signs carry the phase information.
class CliffordTableau {
public:
  explicit CliffordTableau(std::size_t n);

  static CliffordTableau identity(std::size_t n) { return CliffordTableau(n); }
  /// Build from explicit generator images (size 2n, X images then Z images).
  static CliffordTableau from_rows(std::size_t n, std::vector<PauliString> rows);
  /// Same, skipping the symplectic-form validation.  For rows produced by
  /// operations that preserve the form by construction.
  static CliffordTableau from_rows_unchecked(std::size_t n, std::vector<PauliString> rows);

  std::size_t n_qubits() const { return n_; }

  const PauliString& x_image(std::size_t j) const { return rows_[j]; }
  const PauliString& z_image(std::size_t j) const { return rows_[n_ + j]; }
  const PauliString& row(std::size_t idx) const { return rows_[idx]; }

  /// U P U^dag with exact sign.
  PauliString conjugate(const PauliString& p) const;

  bool is_identity() const;

  /// Checks that the bit matrix preserves the symplectic form.
  bool is_symplectic() const;

  // In-place left multiplication by elementary gates: U <- G * U.
  CliffordTableau& apply_h(std::size_t q);
  CliffordTableau& apply_s(std::size_t q);
  CliffordTableau& apply_sdg(std::size_t q);
  CliffordTableau& apply_x(std::size_t q);
  CliffordTableau& apply_z(std::size_t q);
  CliffordTableau& apply_cx(std::size_t control, std::size_t target);

  std::string to_text(const std::string& kind = "none") const;
  /// Parses to_text output; returns the tableau and the kind tag.
  static std::pair<CliffordTableau, std::string> from_text(const std::string& text);

  bool operator==(const CliffordTableau& o) const { return n_ == o.n_ && rows_ == o.rows_; }
  bool operator!=(const CliffordTableau& o) const { return !(*this == o); }

private:
  std::size_t n_;
  std::vector<PauliString> rows_;
};

/// Tableau of the composition a*b (b acts first under conjugation).
CliffordTableau compose(const CliffordTableau& a, const CliffordTableau& b);

/// Inverse via the symplectic transpose identity plus a phase solve; never
/// performs GF(2) matrix inversion.
CliffordTableau inverse(const CliffordTableau& t);

/// Embeds block tableaus onto the listed qubit sets of an n-qubit identity.
/// Sets must be disjoint; uncovered qubits act as identity.
CliffordTableau embed(std::size_t n,
                      const std::vector<std::pair<CliffordTableau, std::vector<std::size_t>>>& blocks);

}  // namespace cliffshadow
