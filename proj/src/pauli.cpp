#include "cliffshadow/pauli.hpp"

#include <stdexcept>

namespace cliffshadow {

namespace {

void check_lengths(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits()) throw std::invalid_argument("PauliString: length mismatch");
}

}  // namespace

PauliString::PauliString(std::size_t n_qubits, BitVec x, BitVec z, bool negative)
    : n_(n_qubits), x_(std::move(x)), z_(std::move(z)), negative_(negative) {
  if (x_.size() != n_ || z_.size() != n_)
    throw std::invalid_argument("PauliString: bit vectors must have exactly n_qubits bits");
}

PauliString PauliString::z_string(std::size_t n, std::uint64_t z_index) {
  if (n > 64) throw std::invalid_argument("PauliString::z_string: index form limited to n <= 64");
  PauliString p(n);
  for (std::size_t q = 0; q < n; ++q) {
    if ((z_index >> (n - 1 - q)) & 1u) p.z_.set(q, true);
  }
  return p;
}

PauliString PauliString::single(std::size_t n, std::size_t qubit, char axis) {
  if (qubit >= n) throw std::out_of_range("PauliString::single: qubit out of range");
  PauliString p(n);
  switch (axis) {
    case 'I':
      break;
    case 'X':
      p.x_.set(qubit, true);
      break;
    case 'Y':
      p.x_.set(qubit, true);
      p.z_.set(qubit, true);
      break;
    case 'Z':
      p.z_.set(qubit, true);
      break;
    default:
      throw std::invalid_argument("PauliString::single: axis must be one of I,X,Y,Z");
  }
  return p;
}

PauliString PauliString::parse(const std::string& text) {
  std::size_t start = 0;
  bool neg = false;
  if (!text.empty() && text[0] == '-') {
    neg = true;
    start = 1;
  }
  if (text.size() == start) throw std::invalid_argument("PauliString::parse: empty Pauli text");
  std::size_t n = text.size() - start;
  PauliString p(n);
  for (std::size_t q = 0; q < n; ++q) {
    char c = text[start + q];
    switch (c) {
      case 'I':
        break;
      case 'X':
        p.x_.set(q, true);
        break;
      case 'Y':
        p.x_.set(q, true);
        p.z_.set(q, true);
        break;
      case 'Z':
        p.z_.set(q, true);
        break;
      default:
        throw std::invalid_argument(std::string("PauliString::parse: invalid character '") + c + "'");
    }
  }
  p.negative_ = neg;
  return p;
}

PauliString PauliString::with_sign(bool negative) const {
  PauliString p = *this;
  p.negative_ = negative;
  return p;
}

std::uint64_t PauliString::z_index() const {
  if (n_ > 64) throw std::invalid_argument("PauliString::z_index: limited to n <= 64");
  std::uint64_t v = 0;
  for (std::size_t q = 0; q < n_; ++q) {
    v = (v << 1) | (z_.get(q) ? 1u : 0u);
  }
  return v;
}

std::uint64_t PauliString::x_index() const {
  if (n_ > 64) throw std::invalid_argument("PauliString::x_index: limited to n <= 64");
  std::uint64_t v = 0;
  for (std::size_t q = 0; q < n_; ++q) {
    v = (v << 1) | (x_.get(q) ? 1u : 0u);
  }
  return v;
}

std::size_t PauliString::weight() const {
  std::size_t w = 0;
  for (std::size_t q = 0; q < n_; ++q) {
    if (x_.get(q) || z_.get(q)) ++w;
  }
  return w;
}

char PauliString::axis_at(std::size_t q) const {
  bool x = x_.get(q), z = z_.get(q);
  if (x && z) return 'Y';
  if (x) return 'X';
  if (z) return 'Z';
  return 'I';
}

std::string PauliString::to_string() const {
  std::string s;
  if (negative_) s.push_back('-');
  for (std::size_t q = 0; q < n_; ++q) s.push_back(axis_at(q));
  return s;
}

std::uint64_t PauliString::hash() const {
  std::uint64_t h = x_.hash() * 0x100000001b3ull ^ z_.hash();
  return h ^ (negative_ ? 0x5851f42d4c957f2dull : 0);
}

PauliString PauliProduct::hermitian() const {
  if (!is_hermitian())
    throw std::domain_error("PauliProduct: product has imaginary phase (anticommuting factors)");
  int ip = ((i_power % 4) + 4) % 4;
  return ip == 0 ? pauli : pauli.negated();
}

PauliProduct multiply_with_phase(const PauliString& a, const PauliString& b) {
  check_lengths(a, b);
  std::size_t n = a.n_qubits();
  // Work in XZ form:  operator = i^t * prod_q X^x Z^z  (X left of Z per qubit).
  // Conversion to/from the Hermitian convention shifts t by the Y count.
  int ta = static_cast<int>(a.x_bits().and_popcount(a.z_bits()) % 4) + (a.is_negative() ? 2 : 0);
  int tb = static_cast<int>(b.x_bits().and_popcount(b.z_bits()) % 4) + (b.is_negative() ? 2 : 0);
  // Moving b's X block through a's Z block contributes (-1)^{|z_a & x_b|}.
  int cross = static_cast<int>(2 * (a.z_bits().and_popcount(b.x_bits()) % 2));

  BitVec x = a.x_bits();
  x.xor_with(b.x_bits());
  BitVec z = a.z_bits();
  z.xor_with(b.z_bits());

  int y = static_cast<int>(x.and_popcount(z) % 4);
  int i_power = ((ta + tb + cross - y) % 4 + 4) % 4;
  return PauliProduct{PauliString(n, std::move(x), std::move(z), false), i_power};
}

PauliString multiply(const PauliString& a, const PauliString& b) {
  return multiply_with_phase(a, b).hermitian();
}

bool commutes(const PauliString& a, const PauliString& b) {
  check_lengths(a, b);
  std::size_t s = a.x_bits().and_popcount(b.z_bits()) + a.z_bits().and_popcount(b.x_bits());
  return (s % 2) == 0;
}

BlockPartition::BlockPartition(std::size_t n, std::size_t block_size, std::size_t off, Boundary bc)
    : n_qubits(n), k(block_size), offset(off), boundary(bc) {
  if (k == 0 || n == 0 || n % k != 0)
    throw std::invalid_argument("BlockPartition: k must divide n");
  if (offset != 0) {
    if (k % 2 != 0 || offset != k / 2)
      throw std::invalid_argument("BlockPartition: offset must be 0 or k/2 with k even");
  }
}

std::vector<std::vector<std::size_t>> BlockPartition::blocks() const {
  std::vector<std::vector<std::size_t>> out;
  std::size_t m = n_qubits / k;
  if (offset == 0) {
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<std::size_t> blk(k);
      for (std::size_t j = 0; j < k; ++j) blk[j] = i * k + j;
      out.push_back(std::move(blk));
    }
    return out;
  }
  if (boundary == Boundary::Periodic) {
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<std::size_t> blk(k);
      for (std::size_t j = 0; j < k; ++j) blk[j] = (offset + i * k + j) % n_qubits;
      out.push_back(std::move(blk));
    }
  } else {
    std::vector<std::size_t> left(offset);
    for (std::size_t j = 0; j < offset; ++j) left[j] = j;
    out.push_back(std::move(left));
    for (std::size_t i = 0; i + 1 < m; ++i) {
      std::vector<std::size_t> blk(k);
      for (std::size_t j = 0; j < k; ++j) blk[j] = offset + i * k + j;
      out.push_back(std::move(blk));
    }
    std::vector<std::size_t> right(offset);
    for (std::size_t j = 0; j < offset; ++j) right[j] = n_qubits - offset + j;
    out.push_back(std::move(right));
  }
  return out;
}

std::size_t block_weight(const PauliString& p, const BlockPartition& part) {
  if (part.n_qubits != p.n_qubits())
    throw std::invalid_argument("block_weight: partition incompatible with Pauli length");
  std::size_t w = 0;
  for (const auto& blk : part.blocks()) {
    for (std::size_t q : blk) {
      if (p.x_bit(q) || p.z_bit(q)) {
        ++w;
        break;
      }
    }
  }
  return w;
}

PauliString restrict_to(const PauliString& p, const std::vector<std::size_t>& qubits) {
  PauliString out(qubits.size());
  BitVec x(qubits.size()), z(qubits.size());
  for (std::size_t j = 0; j < qubits.size(); ++j) {
    if (qubits[j] >= p.n_qubits()) throw std::out_of_range("restrict_to: qubit index out of range");
    x.set(j, p.x_bit(qubits[j]));
    z.set(j, p.z_bit(qubits[j]));
  }
  return PauliString(qubits.size(), std::move(x), std::move(z), false);
}

Eigen::MatrixXcd pauli_to_dense(const PauliString& p, std::size_t dense_limit) {
  std::size_t n = p.n_qubits();
  if (n > dense_limit)
    throw std::invalid_argument("pauli_to_dense: n exceeds the dense limit");
  std::size_t d = std::size_t(1) << n;
  std::uint64_t xmask = p.x_index();
  std::uint64_t zmask = p.z_index();
  int y = static_cast<int>(p.x_bits().and_popcount(p.z_bits()) % 4);
  static const std::complex<double> i_pows[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  std::complex<double> pref = i_pows[y] * static_cast<double>(p.sign());

  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (std::uint64_t c = 0; c < d; ++c) {
    double par = (std::popcount(zmask & c) % 2 == 0) ? 1.0 : -1.0;
    m(c ^ xmask, c) = pref * par;
  }
  return m;
}

}  // namespace cliffshadow
