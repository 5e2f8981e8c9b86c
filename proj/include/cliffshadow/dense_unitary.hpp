#pragma once

#include <Eigen/Dense>

#include "cliffshadow/pauli.hpp"
#include "cliffshadow/tableau.hpp"

namespace cliffshadow {

/// out += coeff * P_dense * v without materializing the Pauli matrix.
void accumulate_pauli_apply(Eigen::VectorXcd& out, const PauliString& p,
                            const Eigen::VectorXcd& v, std::complex<double> coeff);

/// Dense unitary realizing the tableau, up to one global phase.  Columns
/// are built as (U X^b U^dag) applied to the stabilizer state U|0...0>.
Eigen::MatrixXcd tableau_to_dense(const CliffordTableau& t,
                                  std::size_t dense_limit = kDefaultDenseLimit);

}  // namespace cliffshadow
