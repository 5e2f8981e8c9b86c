#include "cliffshadow/density_matrix.hpp"

#include <bit>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "cliffshadow/dense_unitary.hpp"

namespace cliffshadow {

Outcome Outcome::from_index(std::size_t n, std::uint64_t index) {
  Outcome o(n);
  for (std::size_t q = 0; q < n; ++q) o.bits.set(q, (index >> (n - 1 - q)) & 1u);
  return o;
}

std::uint64_t Outcome::index() const {
  std::uint64_t v = 0;
  for (std::size_t q = 0; q < bits.size(); ++q) v = (v << 1) | (bits.get(q) ? 1u : 0u);
  return v;
}

std::string Outcome::to_string() const {
  std::string s;
  for (std::size_t q = 0; q < bits.size(); ++q) s.push_back(bits.get(q) ? '1' : '0');
  return s;
}

Outcome Outcome::parse(const std::string& s) {
  Outcome o(s.size());
  for (std::size_t q = 0; q < s.size(); ++q) {
    if (s[q] != '0' && s[q] != '1') throw std::invalid_argument("Outcome::parse: bad bit");
    o.bits.set(q, s[q] == '1');
  }
  return o;
}

DensityMatrix::DensityMatrix(std::size_t n, Eigen::MatrixXcd m) : n_(n), m_(std::move(m)) {
  std::size_t d = std::size_t(1) << n;
  if (m_.rows() != static_cast<Eigen::Index>(d) || m_.cols() != static_cast<Eigen::Index>(d))
    throw std::invalid_argument("DensityMatrix: matrix dimension must be 2^n");
}

DensityMatrix DensityMatrix::basis_state(std::size_t n, std::uint64_t index) {
  std::size_t d = std::size_t(1) << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  m(index, index) = 1.0;
  return DensityMatrix(n, std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t n) {
  std::size_t d = std::size_t(1) << n;
  return DensityMatrix(n, Eigen::MatrixXcd::Identity(d, d) / static_cast<double>(d));
}

void DensityMatrix::validate(double tol) const {
  if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > tol)
    throw std::runtime_error("DensityMatrix: not Hermitian");
  if (std::abs(m_.trace().real() - 1.0) > tol || std::abs(m_.trace().imag()) > tol)
    throw std::runtime_error("DensityMatrix: trace differs from 1");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol)
    throw std::runtime_error("DensityMatrix: negative eigenvalue");
}

std::string complex_matrix_to_text(std::size_t n, const Eigen::MatrixXcd& m) {
  std::ostringstream os;
  os << "state n=" << n << "\n";
  char buf[64];
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      std::snprintf(buf, sizeof buf, "%.17g %.17g\n", m(r, c).real(), m(r, c).imag());
      os << buf;
    }
  }
  return os.str();
}

std::pair<std::size_t, Eigen::MatrixXcd> complex_matrix_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string tag, nfield;
  is >> tag >> nfield;
  if (tag != "state" || nfield.rfind("n=", 0) != 0)
    throw std::invalid_argument("complex_matrix_from_text: bad header");
  std::size_t n = std::stoul(nfield.substr(2));
  std::size_t d = std::size_t(1) << n;
  Eigen::MatrixXcd m(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      double re, im;
      if (!(is >> re >> im)) throw std::invalid_argument("complex_matrix_from_text: truncated");
      m(r, c) = {re, im};
    }
  }
  return {n, std::move(m)};
}

std::string DensityMatrix::to_text() const { return complex_matrix_to_text(n_, m_); }

DensityMatrix DensityMatrix::from_text(const std::string& text) {
  auto [n, m] = complex_matrix_from_text(text);
  return DensityMatrix(n, std::move(m));
}

DensityMatrix random_rank_r_state(std::size_t n, std::size_t r, RngStream& rng,
                                  std::size_t dense_limit) {
  if (n > dense_limit) throw std::invalid_argument("random_rank_r_state: n exceeds dense limit");
  std::size_t d = std::size_t(1) << n;
  if (r < 1 || r > d) throw std::invalid_argument("random_rank_r_state: rank out of range");
  Eigen::MatrixXcd g(d, r);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < r; ++j) g(i, j) = {rng.gaussian(), rng.gaussian()};
  }
  Eigen::MatrixXcd m = g * g.adjoint();
  m /= m.trace().real();
  return DensityMatrix(n, std::move(m));
}

DensityMatrix apply_clifford_pauli_basis(const DensityMatrix& rho, const CliffordTableau& c) {
  std::size_t n = rho.n_qubits();
  if (c.n_qubits() != n) throw std::invalid_argument("apply_clifford: size mismatch");
  std::size_t d = rho.dim();
  const Eigen::MatrixXcd& m = rho.matrix();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
  static const std::complex<double> i_pows[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

  for (std::uint64_t xz = 0; xz < (std::uint64_t(1) << (2 * n)); ++xz) {
    BitVec x(n), z(n);
    for (std::size_t q = 0; q < n; ++q) {
      x.set(q, (xz >> (2 * n - 1 - q)) & 1);
      z.set(q, (xz >> (n - 1 - q)) & 1);
    }
    PauliString p(n, std::move(x), std::move(z), false);

    // tr(rho P) over the sparse Pauli structure
    std::uint64_t xm = p.x_index(), zm = p.z_index();
    int y = static_cast<int>(p.x_bits().and_popcount(p.z_bits()) % 4);
    std::complex<double> pref = i_pows[y];
    std::complex<double> tr = 0;
    for (std::uint64_t col = 0; col < d; ++col) {
      double par = (std::popcount(zm & col) % 2 == 0) ? 1.0 : -1.0;
      tr += m(col, col ^ xm) * pref * par;
    }
    std::complex<double> coeff = tr / static_cast<double>(d);
    if (std::abs(coeff) < 1e-300) continue;

    PauliString img = c.conjugate(p);
    std::uint64_t ix = img.x_index(), iz = img.z_index();
    int iy = static_cast<int>(img.x_bits().and_popcount(img.z_bits()) % 4);
    std::complex<double> ipref = i_pows[iy] * static_cast<double>(img.sign()) * coeff;
    for (std::uint64_t col = 0; col < d; ++col) {
      double par = (std::popcount(iz & col) % 2 == 0) ? 1.0 : -1.0;
      out(col ^ ix, col) += ipref * par;
    }
  }
  return DensityMatrix(n, std::move(out));
}

DensityMatrix apply_clifford_dense(const DensityMatrix& rho, const CliffordTableau& c) {
  if (c.n_qubits() != rho.n_qubits()) throw std::invalid_argument("apply_clifford: size mismatch");
  Eigen::MatrixXcd u = tableau_to_dense(c, rho.n_qubits());
  return DensityMatrix(rho.n_qubits(), u * rho.matrix() * u.adjoint());
}

DensityMatrix apply_clifford(const DensityMatrix& rho, const CliffordTableau& c) {
  return rho.n_qubits() <= 6 ? apply_clifford_pauli_basis(rho, c) : apply_clifford_dense(rho, c);
}

Eigen::VectorXd born_probabilities(const DensityMatrix& rho) {
  Eigen::VectorXd p = rho.matrix().diagonal().real();
  double clipped = 0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p(i) < 0) {
      clipped += -p(i);
      p(i) = 0;
    }
  }
  if (clipped > 1e-8) throw std::runtime_error("born_probabilities: negative diagonal mass");
  double total = p.sum();
  if (std::abs(total - 1.0) > 1e-6)
    throw std::runtime_error("born_probabilities: diagonal mass deviates from 1");
  return p / total;
}

Outcome born_sample(const DensityMatrix& rho, RngStream& rng) {
  Eigen::VectorXd p = born_probabilities(rho);
  double u = rng.uniform_unit();
  double acc = 0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    acc += p(i);
    if (u < acc) return Outcome::from_index(rho.n_qubits(), static_cast<std::uint64_t>(i));
  }
  return Outcome::from_index(rho.n_qubits(), static_cast<std::uint64_t>(p.size() - 1));
}

namespace {

Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix distance: size mismatch");
  Eigen::MatrixXcd diff = a - b;
  if ((diff - diff.adjoint()).cwiseAbs().maxCoeff() > 1e-8)
    throw std::invalid_argument("matrix distance: difference is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(diff, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

}  // namespace

double trace_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return hermitian_eigenvalues(a, b).cwiseAbs().sum();
}

double frobenius_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return std::sqrt(hermitian_eigenvalues(a, b).cwiseAbs2().sum());
}

double opnorm_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return hermitian_eigenvalues(a, b).cwiseAbs().maxCoeff();
}

double pauli_expectation(const Eigen::MatrixXcd& m, const PauliString& p) {
  std::size_t n = p.n_qubits();
  if (m.rows() != static_cast<Eigen::Index>(std::size_t(1) << n))
    throw std::invalid_argument("pauli_expectation: size mismatch");
  std::uint64_t xm = p.x_index(), zm = p.z_index();
  int y = static_cast<int>(p.x_bits().and_popcount(p.z_bits()) % 4);
  static const std::complex<double> i_pows[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  std::complex<double> pref = i_pows[y] * static_cast<double>(p.sign());
  std::complex<double> tr = 0;
  for (std::uint64_t col = 0; col < static_cast<std::uint64_t>(m.rows()); ++col) {
    double par = (std::popcount(zm & col) % 2 == 0) ? 1.0 : -1.0;
    tr += m(col, col ^ xm) * pref * par;
  }
  return tr.real();
}

double pauli_expectation(const DensityMatrix& rho, const PauliString& p) {
  return pauli_expectation(rho.matrix(), p);
}

}  // namespace cliffshadow
