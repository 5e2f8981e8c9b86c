#include "cliffshadow/oracles.hpp"

#include <bit>

#include "cliffshadow/channel.hpp"
#include "cliffshadow/dense_unitary.hpp"
#include "cliffshadow/estimators.hpp"
#include "cliffshadow/sampling.hpp"

namespace cliffshadow {

namespace {

std::vector<PauliString> all_paulis(std::size_t n) {
  std::vector<PauliString> out;
  for (std::uint64_t xz = 0; xz < (std::uint64_t(1) << (2 * n)); ++xz) {
    BitVec x(n), z(n);
    for (std::size_t q = 0; q < n; ++q) {
      x.set(q, (xz >> (2 * n - 1 - q)) & 1);
      z.set(q, (xz >> (n - 1 - q)) & 1);
    }
    out.emplace_back(n, std::move(x), std::move(z), false);
  }
  return out;
}

// all 24^n products of single-qubit Cliffords
std::vector<CliffordTableau> all_block_k1_unitaries(std::size_t n) {
  auto cl1 = enumerate_cl1();
  std::vector<CliffordTableau> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= cl1.size();
  out.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t rem = code;
    std::vector<std::pair<CliffordTableau, std::vector<std::size_t>>> blocks;
    for (std::size_t q = 0; q < n; ++q) {
      blocks.emplace_back(cl1[rem % cl1.size()], std::vector<std::size_t>{q});
      rem /= cl1.size();
    }
    out.push_back(embed(n, blocks));
  }
  return out;
}

}  // namespace

PatternSums g_entries_bruteforce(std::size_t k) {
  if (k % 2 != 0) throw std::invalid_argument("g_entries_bruteforce: k must be even");
  std::size_t half = k / 2;
  PatternSums sums;
  auto paulis = all_paulis(k);
  for (const auto& p : paulis) {
    for (const auto& q : paulis) {
      bool left_differs = false, right_differs = false;
      for (std::size_t i = 0; i < half; ++i) {
        if (p.x_bit(i) != q.x_bit(i) || p.z_bit(i) != q.z_bit(i)) left_differs = true;
      }
      for (std::size_t i = half; i < k; ++i) {
        if (p.x_bit(i) != q.x_bit(i) || p.z_bit(i) != q.z_bit(i)) right_differs = true;
      }
      sums.entry[left_differs ? 1 : 0][right_differs ? 1 : 0] += tau_full(p, q);
    }
  }
  return sums;
}

Rational config_sum_bruteforce(const Rat2x2& f, const Rat2x2& g, std::size_t m) {
  std::size_t slots = 2 * m;
  Rational total(0);
  for (std::uint64_t c = 0; c < (std::uint64_t(1) << slots); ++c) {
    auto bit = [&](std::size_t i) { return static_cast<int>((c >> i) & 1u); };
    Rational term(1);
    for (std::size_t i = 0; i < m; ++i) {
      term *= f(bit(2 * i), bit(2 * i + 1));
      term *= g(bit(2 * i + 1), bit((2 * i + 2) % slots));
    }
    total += term;
  }
  return total;
}

Rational sum_inv_NP_bruteforce(std::size_t n, std::size_t k) {
  BlockPartition part(n, k);
  std::int64_t base = (std::int64_t(1) << k) + 1;
  Rational total(0);
  for (const auto& p : all_paulis(n)) {
    std::size_t w = block_weight(p, part);
    total += Rational(1, base).pow(static_cast<unsigned>(n / k - w));
  }
  return total;
}

Rational sum_inv_NP_sq_per_basis_bruteforce(std::size_t n, std::size_t k) {
  // fix the all-zero product basis and enumerate its actionable Paulis
  std::vector<std::size_t> idx(n / k, 0);
  CliffordTableau basis = mub_product_tableau(n, k, idx);
  BlockPartition part(n, k);
  std::int64_t base = (std::int64_t(1) << k) + 1;
  Rational total(0);
  for (const auto& p : all_paulis(n)) {
    if (!basis.conjugate(p).is_z_string()) continue;
    std::size_t w = block_weight(p, part);
    total += Rational(1, base).pow(static_cast<unsigned>(n / k - w)).pow(2);
  }
  return total;
}

Rational k_contraction(std::size_t k, const std::vector<bool>& pattern) {
  KPair kp = build_K(k);
  Rat2x2 prod = Rat2x2::identity();
  for (bool t : pattern) prod = prod * (t ? kp.K1 : kp.K0);
  return prod.trace();
}

bool k_contraction_min_at_all_ones(std::size_t k, std::size_t m) {
  std::vector<bool> ones(m, true);
  Rational best = k_contraction(k, ones);
  for (std::uint64_t c = 0; c < (std::uint64_t(1) << m); ++c) {
    std::vector<bool> pattern(m);
    for (std::size_t i = 0; i < m; ++i) pattern[i] = (c >> i) & 1u;
    if (k_contraction(k, pattern) < best) return false;
  }
  return true;
}

Eigen::MatrixXcd exhaustive_channel_apply_block_k1(const PauliString& p) {
  std::size_t n = p.n_qubits();
  if (n > 2) throw std::invalid_argument("exhaustive_channel_apply_block_k1: n <= 2 only");
  std::uint64_t d = std::uint64_t(1) << n;
  auto unitaries = all_block_k1_unitaries(n);
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(d, d);
  Eigen::MatrixXcd pd = pauli_to_dense(p);
  for (const auto& u : unitaries) {
    Eigen::MatrixXcd ud = tableau_to_dense(u);
    Eigen::MatrixXcd rotated = ud * pd * ud.adjoint();
    for (std::uint64_t b = 0; b < d; ++b) {
      acc += rotated(b, b) * (ud.adjoint().col(b) * ud.row(b));
    }
  }
  return acc / static_cast<double>(unitaries.size());
}

Eigen::MatrixXcd exhaustive_mean_estimator_block_k1(const DensityMatrix& rho) {
  std::size_t n = rho.n_qubits();
  if (n > 2) throw std::invalid_argument("exhaustive_mean_estimator_block_k1: n <= 2 only");
  std::uint64_t d = std::uint64_t(1) << n;
  EnsembleSpec spec(EnsembleKind::Block, n, 1);
  ChannelSpectrum spectrum(spec);
  auto unitaries = all_block_k1_unitaries(n);
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(d, d);
  for (const auto& u : unitaries) {
    Eigen::MatrixXcd ud = tableau_to_dense(u);
    Eigen::MatrixXcd rotated = ud * rho.matrix() * ud.adjoint();
    for (std::uint64_t b = 0; b < d; ++b) {
      double prob = rotated(b, b).real();
      Snapshot s(u, Outcome::from_index(n, b), spec);
      acc += prob * snapshot_to_matrix(s, spectrum);
    }
  }
  return acc / static_cast<double>(unitaries.size());
}

Eigen::MatrixXcd exhaustive_mub_expectation(const DensityMatrix& rho, std::size_t k) {
  std::size_t n = rho.n_qubits();
  std::uint64_t d = std::uint64_t(1) << n;
  std::size_t m = n / k;
  auto bases = mub_bases(k);
  std::size_t num_bases = 1;
  for (std::size_t i = 0; i < m; ++i) num_bases *= bases.size();

  BlockPartition part(n, k);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
  std::vector<std::size_t> idx(m);
  for (std::size_t linear = 0; linear < num_bases; ++linear) {
    std::size_t rem = linear;
    for (std::size_t i = m; i-- > 0;) {
      idx[i] = rem % bases.size();
      rem /= bases.size();
    }
    CliffordTableau c = mub_product_tableau(n, k, idx);
    Eigen::MatrixXcd cd = tableau_to_dense(c);
    Eigen::MatrixXcd rotated = cd * rho.matrix() * cd.adjoint();

    for (const auto& p : all_paulis(n)) {
      PauliString img = c.conjugate(p);
      if (!img.is_z_string()) continue;
      std::uint64_t zi = img.z_index();
      double expect = 0;
      for (std::uint64_t b = 0; b < d; ++b) {
        double par = (std::popcount(zi & b) % 2 == 0) ? 1.0 : -1.0;
        expect += rotated(b, b).real() * img.sign() * par;
      }
      std::size_t w = block_weight(p, part);
      double np = static_cast<double>(actionable_basis_count(n, k, w));
      Eigen::MatrixXcd pd = pauli_to_dense(p);
      out += (expect / (static_cast<double>(d) * np)) * pd;
    }
  }
  return out;
}

}  // namespace cliffshadow
