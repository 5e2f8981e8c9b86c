#include "cliffshadow/dense_unitary.hpp"

#include <bit>
#include <stdexcept>

namespace cliffshadow {

void accumulate_pauli_apply(Eigen::VectorXcd& out, const PauliString& p,
                            const Eigen::VectorXcd& v, std::complex<double> coeff) {
  std::size_t n = p.n_qubits();
  std::uint64_t d = std::uint64_t(1) << n;
  std::uint64_t xmask = p.x_index();
  std::uint64_t zmask = p.z_index();
  int y = static_cast<int>(p.x_bits().and_popcount(p.z_bits()) % 4);
  static const std::complex<double> i_pows[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  std::complex<double> pref = coeff * i_pows[y] * static_cast<double>(p.sign());
  for (std::uint64_t c = 0; c < d; ++c) {
    double par = (std::popcount(zmask & c) % 2 == 0) ? 1.0 : -1.0;
    out(c ^ xmask) += pref * par * v(c);
  }
}

Eigen::MatrixXcd tableau_to_dense(const CliffordTableau& t, std::size_t dense_limit) {
  std::size_t n = t.n_qubits();
  if (n > dense_limit) throw std::invalid_argument("tableau_to_dense: n exceeds the dense limit");
  std::uint64_t d = std::uint64_t(1) << n;

  // |psi0> = U|0...0>, the +1 eigenvector of all Z images.  Project a basis
  // vector through prod_j (I + S_j)/2 and keep the first nonzero result.
  Eigen::VectorXcd psi0;
  bool found = false;
  for (std::uint64_t r = 0; r < d && !found; ++r) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(d);
    v(r) = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      Eigen::VectorXcd w = v;
      accumulate_pauli_apply(w, t.z_image(j), v, 1.0);
      v = 0.5 * w;
    }
    double nrm = v.norm();
    if (nrm > 1e-9) {
      psi0 = v / nrm;
      found = true;
    }
  }
  if (!found) throw std::logic_error("tableau_to_dense: no stabilized state found");

  Eigen::MatrixXcd u(d, d);
  for (std::uint64_t b = 0; b < d; ++b) {
    // U|b> = (U X^b U^dag) |psi0>; X factors commute so the product is exact.
    PauliProduct acc{PauliString::identity(n), 0};
    for (std::size_t q = 0; q < n; ++q) {
      if ((b >> (n - 1 - q)) & 1u) {
        auto next = multiply_with_phase(acc.pauli, t.x_image(q));
        acc.i_power = (acc.i_power + next.i_power) % 4;
        acc.pauli = next.pauli;
      }
    }
    Eigen::VectorXcd col = Eigen::VectorXcd::Zero(d);
    accumulate_pauli_apply(col, acc.hermitian(), psi0, 1.0);
    u.col(b) = col;
  }
  return u;
}

}  // namespace cliffshadow
