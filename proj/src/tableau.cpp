#include "cliffshadow/tableau.hpp"

#include <sstream>
#include <stdexcept>

namespace cliffshadow {

CliffordTableau::CliffordTableau(std::size_t n) : n_(n) {
  if (n == 0) throw std::invalid_argument("CliffordTableau: n must be positive");
  rows_.reserve(2 * n);
  for (std::size_t j = 0; j < n; ++j) rows_.push_back(PauliString::single(n, j, 'X'));
  for (std::size_t j = 0; j < n; ++j) rows_.push_back(PauliString::single(n, j, 'Z'));
}

CliffordTableau CliffordTableau::from_rows(std::size_t n, std::vector<PauliString> rows) {
  CliffordTableau t = from_rows_unchecked(n, std::move(rows));
  if (!t.is_symplectic())
    throw std::invalid_argument("CliffordTableau::from_rows: rows do not preserve the symplectic form");
  return t;
}

CliffordTableau CliffordTableau::from_rows_unchecked(std::size_t n, std::vector<PauliString> rows) {
  if (rows.size() != 2 * n) throw std::invalid_argument("CliffordTableau::from_rows: need 2n rows");
  for (const auto& r : rows) {
    if (r.n_qubits() != n) throw std::invalid_argument("CliffordTableau::from_rows: row length mismatch");
  }
  CliffordTableau t(n);
  t.rows_ = std::move(rows);
  return t;
}

PauliString CliffordTableau::conjugate(const PauliString& p) const {
  if (p.n_qubits() != n_) throw std::invalid_argument("CliffordTableau::conjugate: dimension mismatch");

  // Accumulate the row product in XZ form: operator = i^t * X^x Z^z.
  BitVec ax(n_), az(n_);
  int t = static_cast<int>(p.x_bits().and_popcount(p.z_bits()) % 4) + (p.is_negative() ? 2 : 0);

  auto mul_row = [&](const PauliString& r) {
    int tr = static_cast<int>(r.x_bits().and_popcount(r.z_bits()) % 4) + (r.is_negative() ? 2 : 0);
    int cross = static_cast<int>(2 * (az.and_popcount(r.x_bits()) % 2));
    t = (t + tr + cross) % 4;
    ax.xor_with(r.x_bits());
    az.xor_with(r.z_bits());
  };

  for (std::size_t j = 0; j < n_; ++j) {
    if (p.x_bit(j)) mul_row(rows_[j]);
  }
  for (std::size_t j = 0; j < n_; ++j) {
    if (p.z_bit(j)) mul_row(rows_[n_ + j]);
  }

  int y = static_cast<int>(ax.and_popcount(az) % 4);
  int phase = ((t - y) % 4 + 4) % 4;
  if (phase % 2 != 0)
    throw std::logic_error("CliffordTableau::conjugate: imaginary phase, corrupt tableau");
  return PauliString(n_, std::move(ax), std::move(az), phase == 2);
}

bool CliffordTableau::is_identity() const {
  CliffordTableau id(n_);
  return rows_ == id.rows_;
}

namespace {

int symplectic_product(const PauliString& a, const PauliString& b) {
  return static_cast<int>((a.x_bits().and_popcount(b.z_bits()) + a.z_bits().and_popcount(b.x_bits())) % 2);
}

}  // namespace

bool CliffordTableau::is_symplectic() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (symplectic_product(rows_[i], rows_[j]) != 0) return false;
      if (symplectic_product(rows_[n_ + i], rows_[n_ + j]) != 0) return false;
      if (symplectic_product(rows_[i], rows_[n_ + j]) != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

CliffordTableau& CliffordTableau::apply_h(std::size_t q) {
  for (auto& r : rows_) {
    bool x = r.x_bit(q), z = r.z_bit(q);
    bool neg = r.is_negative() ^ (x && z);
    BitVec xs = r.x_bits(), zs = r.z_bits();
    xs.set(q, z);
    zs.set(q, x);
    r = PauliString(n_, std::move(xs), std::move(zs), neg);
  }
  return *this;
}

CliffordTableau& CliffordTableau::apply_s(std::size_t q) {
  for (auto& r : rows_) {
    bool x = r.x_bit(q), z = r.z_bit(q);
    bool neg = r.is_negative() ^ (x && z);
    BitVec xs = r.x_bits(), zs = r.z_bits();
    zs.set(q, z ^ x);
    r = PauliString(n_, std::move(xs), std::move(zs), neg);
  }
  return *this;
}

CliffordTableau& CliffordTableau::apply_sdg(std::size_t q) {
  // S^dag = Z * S
  apply_s(q);
  apply_z(q);
  return *this;
}

CliffordTableau& CliffordTableau::apply_x(std::size_t q) {
  for (auto& r : rows_) {
    if (r.z_bit(q)) r = r.negated();
  }
  return *this;
}

CliffordTableau& CliffordTableau::apply_z(std::size_t q) {
  for (auto& r : rows_) {
    if (r.x_bit(q)) r = r.negated();
  }
  return *this;
}

CliffordTableau& CliffordTableau::apply_cx(std::size_t control, std::size_t target) {
  if (control == target) throw std::invalid_argument("apply_cx: control equals target");
  for (auto& r : rows_) {
    bool xc = r.x_bit(control), zc = r.z_bit(control);
    bool xt = r.x_bit(target), zt = r.z_bit(target);
    bool neg = r.is_negative() ^ (xc && zt && (xt ^ zc ^ 1));
    BitVec xs = r.x_bits(), zs = r.z_bits();
    xs.set(target, xt ^ xc);
    zs.set(control, zc ^ zt);
    r = PauliString(n_, std::move(xs), std::move(zs), neg);
  }
  return *this;
}

std::string CliffordTableau::to_text(const std::string& kind) const {
  std::ostringstream os;
  os << "tableau n=" << n_ << " kind=" << kind << "\n";
  for (const auto& r : rows_) {
    for (std::size_t q = 0; q < n_; ++q) os << (r.x_bit(q) ? '1' : '0');
    os << '|';
    for (std::size_t q = 0; q < n_; ++q) os << (r.z_bit(q) ? '1' : '0');
    os << ' ' << (r.is_negative() ? '-' : '+') << "\n";
  }
  return os.str();
}

std::pair<CliffordTableau, std::string> CliffordTableau::from_text(const std::string& text) {
  std::istringstream is(text);
  std::string tag, nfield, kindfield;
  is >> tag >> nfield >> kindfield;
  if (tag != "tableau" || nfield.rfind("n=", 0) != 0 || kindfield.rfind("kind=", 0) != 0)
    throw std::invalid_argument("CliffordTableau::from_text: bad header");
  std::size_t n = std::stoul(nfield.substr(2));
  std::string kind = kindfield.substr(5);
  std::vector<PauliString> rows;
  for (std::size_t i = 0; i < 2 * n; ++i) {
    std::string bits, sign;
    is >> bits >> sign;
    if (bits.size() != 2 * n + 1 || bits[n] != '|' || sign.size() != 1)
      throw std::invalid_argument("CliffordTableau::from_text: bad row");
    BitVec x(n), z(n);
    for (std::size_t q = 0; q < n; ++q) {
      x.set(q, bits[q] == '1');
      z.set(q, bits[n + 1 + q] == '1');
    }
    rows.emplace_back(n, std::move(x), std::move(z), sign == "-");
  }
  return {from_rows(n, std::move(rows)), kind};
}

CliffordTableau compose(const CliffordTableau& a, const CliffordTableau& b) {
  if (a.n_qubits() != b.n_qubits()) throw std::invalid_argument("compose: size mismatch");
  std::size_t n = a.n_qubits();
  std::vector<PauliString> rows;
  rows.reserve(2 * n);
  for (std::size_t idx = 0; idx < 2 * n; ++idx) rows.push_back(a.conjugate(b.row(idx)));
  return CliffordTableau::from_rows_unchecked(n, std::move(rows));
}

CliffordTableau inverse(const CliffordTableau& t) {
  std::size_t n = t.n_qubits();
  std::size_t two_n = 2 * n;

  // Row j of the bit matrix S is the (x|z) vector of generator image j.
  auto s_bit = [&](std::size_t row, std::size_t col) -> bool {
    const PauliString& r = t.row(row);
    return col < n ? r.x_bit(col) : r.z_bit(col - n);
  };
  auto swap_half = [&](std::size_t idx) { return idx < n ? idx + n : idx - n; };

  // Inverse bit matrix M = Lambda S^T Lambda, i.e. M[i][j] = S[swap(j)][swap(i)].
  std::vector<BitVec> m_rows(two_n, BitVec(two_n));
  for (std::size_t i = 0; i < two_n; ++i) {
    for (std::size_t j = 0; j < two_n; ++j) {
      if (s_bit(swap_half(j), swap_half(i))) m_rows[i].set(j, true);
    }
  }

  std::vector<PauliString> cand_rows;
  cand_rows.reserve(two_n);
  for (std::size_t i = 0; i < two_n; ++i) {
    BitVec x(n), z(n);
    for (std::size_t q = 0; q < n; ++q) {
      x.set(q, m_rows[i].get(q));
      z.set(q, m_rows[i].get(n + q));
    }
    cand_rows.emplace_back(n, std::move(x), std::move(z), false);
  }
  CliffordTableau candidate = CliffordTableau::from_rows_unchecked(n, std::move(cand_rows));

  // Fix phases: require candidate(t(g_j)) = g_j exactly.  The sign error is
  // linear in the candidate phase bits, so solve S p = e via p = M e.
  BitVec e(two_n);
  CliffordTableau generators(n);
  for (std::size_t j = 0; j < two_n; ++j) {
    PauliString image = candidate.conjugate(t.row(j));
    if (!image.equals_up_to_sign(generators.row(j)))
      throw std::logic_error("inverse: candidate matrix does not invert the tableau");
    e.set(j, image.is_negative());
  }
  std::vector<PauliString> fixed;
  fixed.reserve(two_n);
  for (std::size_t i = 0; i < two_n; ++i) {
    bool flip = (m_rows[i].and_popcount(e) % 2) != 0;
    fixed.push_back(candidate.row(i).with_sign(flip));
  }
  return CliffordTableau::from_rows_unchecked(n, std::move(fixed));
}

CliffordTableau embed(std::size_t n,
                      const std::vector<std::pair<CliffordTableau, std::vector<std::size_t>>>& blocks) {
  std::vector<bool> used(n, false);
  CliffordTableau out(n);
  std::vector<PauliString> rows;
  rows.reserve(2 * n);
  for (std::size_t idx = 0; idx < 2 * n; ++idx) rows.push_back(out.row(idx));

  for (const auto& [tab, qubits] : blocks) {
    if (tab.n_qubits() != qubits.size())
      throw std::invalid_argument("embed: block size does not match qubit set");
    for (std::size_t q : qubits) {
      if (q >= n) throw std::out_of_range("embed: qubit index out of range");
      if (used[q]) throw std::invalid_argument("embed: overlapping qubit sets");
      used[q] = true;
    }
    auto expand = [&](const PauliString& local) {
      BitVec x(n), z(n);
      for (std::size_t j = 0; j < qubits.size(); ++j) {
        x.set(qubits[j], local.x_bit(j));
        z.set(qubits[j], local.z_bit(j));
      }
      return PauliString(n, std::move(x), std::move(z), local.is_negative());
    };
    for (std::size_t j = 0; j < qubits.size(); ++j) {
      rows[qubits[j]] = expand(tab.x_image(j));
      rows[n + qubits[j]] = expand(tab.z_image(j));
    }
  }
  return CliffordTableau::from_rows_unchecked(n, std::move(rows));
}

}  // namespace cliffshadow
