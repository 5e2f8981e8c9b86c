#include "cliffshadow/sampling.hpp"

#include <stdexcept>

#include "cliffshadow/gf2.hpp"

namespace cliffshadow {

namespace {

// (x|z) vector of a Pauli, length 2k.
BitVec pauli_vec(const PauliString& p) {
  std::size_t k = p.n_qubits();
  BitVec v(2 * k);
  for (std::size_t q = 0; q < k; ++q) {
    v.set(q, p.x_bit(q));
    v.set(k + q, p.z_bit(q));
  }
  return v;
}

PauliString vec_pauli(const BitVec& v, bool negative = false) {
  std::size_t k = v.size() / 2;
  BitVec x(k), z(k);
  for (std::size_t q = 0; q < k; ++q) {
    x.set(q, v.get(q));
    z.set(q, v.get(k + q));
  }
  return PauliString(k, std::move(x), std::move(z), negative);
}

// Row whose dot with u equals the symplectic product <c, u>.
BitVec lambda_swap(const BitVec& c) {
  std::size_t k = c.size() / 2;
  BitVec out(c.size());
  for (std::size_t q = 0; q < k; ++q) {
    out.set(q, c.get(k + q));
    out.set(k + q, c.get(q));
  }
  return out;
}

BitVec combine(const std::vector<BitVec>& basis, std::uint64_t coeffs, std::size_t cols) {
  BitVec v(cols);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if ((coeffs >> i) & 1u) v.xor_with(basis[i]);
  }
  return v;
}

}  // namespace

CliffordTableau random_clifford(std::size_t k, RngStream& rng) {
  if (k == 0) throw std::invalid_argument("random_clifford: k must be >= 1");
  if (k > 31) throw std::invalid_argument("random_clifford: k > 31 unsupported");
  std::size_t cols = 2 * k;

  std::vector<BitVec> constraints;  // symplectic-product rows of chosen vectors
  std::vector<BitVec> xs, zs;

  for (std::size_t i = 0; i < k; ++i) {
    std::vector<BitVec> comp = gf2_nullspace(constraints, cols);
    // uniform nonzero element of the complement
    std::uint64_t coeffs = rng.uniform_range(1, (std::uint64_t(1) << comp.size()) - 1);
    BitVec v = combine(comp, coeffs, cols);

    std::vector<BitVec> wcons = constraints;
    wcons.push_back(lambda_swap(v));
    BitVec rhs(wcons.size());
    rhs.set(wcons.size() - 1, true);
    auto w0 = gf2_solve(wcons, rhs, cols);
    if (!w0) throw std::logic_error("random_clifford: no symplectic partner");
    std::vector<BitVec> ker = gf2_nullspace(wcons, cols);
    BitVec w = *w0;
    if (!ker.empty()) {
      std::uint64_t kc = ker.size() >= 64 ? rng.next_u64()
                                          : rng.uniform_below(std::uint64_t(1) << ker.size());
      w.xor_with(combine(ker, kc, cols));
    }

    constraints.push_back(lambda_swap(v));
    constraints.push_back(lambda_swap(w));
    xs.push_back(std::move(v));
    zs.push_back(std::move(w));
  }

  std::vector<PauliString> rows;
  rows.reserve(cols);
  for (std::size_t i = 0; i < k; ++i) rows.push_back(vec_pauli(xs[i], rng.next_bit()));
  for (std::size_t i = 0; i < k; ++i) rows.push_back(vec_pauli(zs[i], rng.next_bit()));
  return CliffordTableau::from_rows_unchecked(k, std::move(rows));
}

std::vector<CliffordTableau> enumerate_cl1() {
  const char axes[3] = {'X', 'Y', 'Z'};
  std::vector<CliffordTableau> out;
  out.reserve(24);
  for (char ax : axes) {
    for (char az : axes) {
      if (ax == az) continue;
      for (int sx = 0; sx < 2; ++sx) {
        for (int sz = 0; sz < 2; ++sz) {
          std::vector<PauliString> rows;
          rows.push_back(PauliString::single(1, 0, ax).with_sign(sx == 1));
          rows.push_back(PauliString::single(1, 0, az).with_sign(sz == 1));
          out.push_back(CliffordTableau::from_rows(1, std::move(rows)));
        }
      }
    }
  }
  return out;
}

CliffordTableau complete_from_z_images(const std::vector<PauliString>& z_images) {
  if (z_images.empty()) throw std::invalid_argument("complete_from_z_images: empty input");
  std::size_t k = z_images[0].n_qubits();
  if (z_images.size() != k)
    throw std::invalid_argument("complete_from_z_images: need exactly k Paulis");
  std::size_t cols = 2 * k;

  std::vector<BitVec> zvecs;
  for (const auto& p : z_images) {
    if (p.n_qubits() != k) throw std::invalid_argument("complete_from_z_images: length mismatch");
    zvecs.push_back(pauli_vec(p));
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (lambda_swap(zvecs[i]).and_popcount(zvecs[j]) % 2 != 0)
        throw std::invalid_argument("complete_from_z_images: images must commute");
    }
  }

  std::vector<BitVec> xvecs;
  for (std::size_t i = 0; i < k; ++i) {
    // <x_i, z_j> = delta_ij, <x_i, x_j> = 0 for j < i
    std::vector<BitVec> rows;
    BitVec rhs(k + xvecs.size());
    for (std::size_t j = 0; j < k; ++j) {
      rows.push_back(lambda_swap(zvecs[j]));
      rhs.set(j, j == i);
    }
    for (const auto& xv : xvecs) rows.push_back(lambda_swap(xv));
    auto sol = gf2_solve(rows, rhs, cols);
    if (!sol)
      throw std::invalid_argument("complete_from_z_images: images are not independent");
    xvecs.push_back(*sol);
  }

  std::vector<PauliString> rows;
  for (const auto& xv : xvecs) rows.push_back(vec_pauli(xv));
  for (const auto& p : z_images) rows.push_back(p);
  return CliffordTableau::from_rows(k, std::move(rows));
}

}  // namespace cliffshadow
