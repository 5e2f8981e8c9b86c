#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cliffshadow/channel.hpp"
#include "cliffshadow/oracles.hpp"
#include "cliffshadow/sampling.hpp"

using namespace cliffshadow;

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

}  // namespace

TEST_CASE("full-group pair correlation values") {
  CHECK(tau_full(PauliString::parse("I"), PauliString::parse("I")) == Rational(1));
  CHECK(tau_full(PauliString::parse("Z"), PauliString::parse("Z")) == Rational(1, 3));
  CHECK(tau_full(PauliString::parse("X"), PauliString::parse("Z")) == Rational(0));
  CHECK(tau_full(PauliString::parse("ZI"), PauliString::parse("IZ")) == Rational(1, 15));
  CHECK(tau_full(PauliString::parse("I"), PauliString::parse("Z")) == Rational(1, 3));
  CHECK(tau_full(PauliString::parse("XX"), PauliString::parse("ZZ")) == Rational(2, 30));
  for (const auto& p : all_paulis(2)) {
    for (const auto& q : all_paulis(2)) {
      Rational t = tau_full(p, q);
      CHECK(t >= Rational(0));
      CHECK(t <= Rational(1));
    }
  }
}

TEST_CASE("blockwise correlation is the per-block product") {
  BlockPartition part(2, 1);
  CHECK(tau_block(PauliString::parse("II"), PauliString::parse("II"), part) == Rational(1));
  CHECK(tau_block(PauliString::parse("ZZ"), PauliString::parse("ZI"), part) == Rational(1, 9));
  CHECK(tau_block(PauliString::parse("XZ"), PauliString::parse("ZZ"), part) == Rational(0));
  // degenerate k = n: must reduce to the full-group values
  BlockPartition full(2, 2);
  for (const auto& p : all_paulis(2)) {
    for (const auto& q : all_paulis(2)) {
      CHECK(tau_block(p, q, full) == tau_full(p, q));
    }
  }
}

TEST_CASE("block ensemble eigenvalues") {
  CHECK(m_block(PauliString::parse("IIII"), 2) == Rational(1));
  CHECK(m_block(PauliString::parse("ZI"), 1) == Rational(1, 3));
  CHECK(m_block(PauliString::parse("ZZZI"), 2) == Rational(1, 25));
  EnsembleSpec spec(EnsembleKind::Block, 2, 1);
  ChannelSpectrum spectrum(spec);
  CHECK(spectrum.inverse_coefficient(PauliString::parse("ZX")) == doctest::Approx(9.0));
}

TEST_CASE("exhaustive average over Cl(1) reproduces m for a single qubit block") {
  // count the fraction of the 24 single-qubit Cliffords mapping Z into +-Z
  auto paulis = std::vector<const char*>{"X", "Y", "Z"};
  for (const char* s : paulis) {
    std::size_t hits = 0;
    auto cl1 = enumerate_cl1();
    for (const auto& u : cl1) {
      if (u.conjugate(PauliString::parse(s)).is_z_string()) ++hits;
    }
    CHECK(Rational(static_cast<std::int64_t>(hits), 24) == Rational(1, 3));
  }
}

TEST_CASE("exhaustive shadow-channel identity for the k=1 block ensemble") {
  for (std::size_t n : {std::size_t(1), std::size_t(2)}) {
    for (const auto& p : all_paulis(n)) {
      Eigen::MatrixXcd lhs = exhaustive_channel_apply_block_k1(p);
      double mp = m_block(p, 1).to_double();
      Eigen::MatrixXcd rhs = mp * pauli_to_dense(p);
      CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("brickwork eigenvalue: identity, the single-qubit value, and the floor") {
  EnsembleSpec spec(EnsembleKind::BrickworkPBC, 4, 2);
  CHECK(m_brickwork(PauliString::parse("IIII"), spec) == Rational(1));
  CHECK(m_brickwork(PauliString::parse("ZIII"), spec) == Rational(13, 125));
  CHECK(channel_eigenvalue(PauliString::parse("ZIII"), spec) == Rational(13, 125));
  ChannelSpectrum spectrum(spec);
  CHECK(spectrum.inverse_coefficient(PauliString::parse("ZIII")) ==
        doctest::Approx(125.0 / 13.0));

  // all-blocks-nontrivial Paulis sit exactly at the minimum
  CHECK(m_brickwork(PauliString::parse("ZZZZ"), spec) == Rational(33, 625));
  Rational floor_val = Rational(1, 25).pow(2);  // (2^k+1)^(-n/k)
  for (const auto& p : all_paulis(4)) {
    Rational m = m_brickwork(p, spec);
    CHECK(m >= floor_val);
    CHECK(m <= Rational(1));
    CHECK(m >= Rational(33, 625));
  }
}

TEST_CASE("brickwork derivation equals the hardcoded occupancy-matrix contraction") {
  for (std::size_t k : {std::size_t(2), std::size_t(4)}) {
    for (std::size_t m = 1; m <= 4; ++m) {
      std::size_t n = m * k;
      EnsembleSpec spec(EnsembleKind::BrickworkPBC, n, k);
      for (std::uint64_t code = 0; code < (std::uint64_t(1) << m); ++code) {
        // build a Pauli whose first-layer support pattern matches the code
        PauliString p(n);
        BitVec x(n), z(n);
        std::vector<bool> pattern(m);
        for (std::size_t i = 0; i < m; ++i) {
          pattern[i] = (code >> i) & 1u;
          if (pattern[i]) z.set(i * k, true);
        }
        p = PauliString(n, std::move(x), std::move(z), false);
        CHECK(m_brickwork(p, spec) == k_contraction(k, pattern));
      }
    }
  }
}

TEST_CASE("monte carlo m matches the exact eigenvalues") {
  RngStream rng(1001);
  const std::size_t samples = 100000;

  SUBCASE("identity is exact") {
    EnsembleSpec spec(EnsembleKind::Block, 2, 1);
    auto est = monte_carlo_m(spec, PauliString::parse("II"), 1000, rng);
    CHECK(est.estimate == 1.0);
    CHECK(est.std_error == 0.0);
  }
  SUBCASE("block value 1/3") {
    EnsembleSpec spec(EnsembleKind::Block, 2, 1);
    auto est = monte_carlo_m(spec, PauliString::parse("ZI"), samples, rng);
    CHECK(std::abs(est.estimate - 1.0 / 3.0) < 5 * est.std_error);
  }
  SUBCASE("brickwork value 13/125") {
    EnsembleSpec spec(EnsembleKind::BrickworkPBC, 4, 2);
    auto est = monte_carlo_m(spec, PauliString::parse("ZIII"), samples, rng);
    CHECK(std::abs(est.estimate - 13.0 / 125.0) < 5 * est.std_error);
  }
}

TEST_CASE("monte carlo m validates the open-boundary contractions") {
  RngStream rng(1002);
  const std::size_t samples = 60000;
  for (auto kind : {EnsembleKind::BrickworkObcU2Split, EnsembleKind::BrickworkObcU1Split}) {
    EnsembleSpec spec(kind, 4, 2);
    for (const char* s : {"ZIII", "IZII", "ZZZI", "IXYZ", "YIIY"}) {
      PauliString p = PauliString::parse(s);
      double exact = m_brickwork(p, spec).to_double();
      auto est = monte_carlo_m(spec, p, samples, rng);
      CHECK(std::abs(est.estimate - exact) < 5 * est.std_error + 1e-9);
    }
  }
}

TEST_CASE("brickwork eigenvalue agrees with monte carlo on random Paulis at n=6") {
  RngStream rng(1003);
  EnsembleSpec spec(EnsembleKind::BrickworkPBC, 6, 2);
  auto paulis = [] {
    RngStream prng(555);
    std::vector<PauliString> out;
    for (int i = 0; i < 10; ++i) {
      BitVec x(6), z(6);
      for (std::size_t q = 0; q < 6; ++q) {
        x.set(q, prng.next_bit());
        z.set(q, prng.next_bit());
      }
      out.emplace_back(6, std::move(x), std::move(z), false);
    }
    return out;
  }();
  for (const auto& p : paulis) {
    double exact = m_brickwork(p, spec).to_double();
    auto est = monte_carlo_m(spec, p, 40000, rng);
    CHECK(std::abs(est.estimate - exact) < 5 * est.std_error + 1e-9);
  }
}

TEST_CASE("monte carlo tau") {
  RngStream rng(1004);
  SUBCASE("identity pair is exact") {
    BlockPartition layer(1, 1);
    auto est = monte_carlo_tau(layer, PauliString::parse("I"), PauliString::parse("I"), 100, rng);
    CHECK(est.estimate == 1.0);
  }
  SUBCASE("single qubit (Z, Z)") {
    BlockPartition layer(1, 1);
    auto est =
        monte_carlo_tau(layer, PauliString::parse("Z"), PauliString::parse("Z"), 100000, rng);
    CHECK(std::abs(est.estimate - 1.0 / 3.0) < 5 * est.std_error);
  }
  SUBCASE("two-qubit commuting distinct pair") {
    BlockPartition layer(2, 2);
    auto est =
        monte_carlo_tau(layer, PauliString::parse("ZI"), PauliString::parse("IZ"), 100000, rng);
    CHECK(std::abs(est.estimate - 1.0 / 15.0) < 5 * est.std_error);
  }
}

TEST_CASE("mub product ensemble shares the block eigenvalue") {
  EnsembleSpec spec(EnsembleKind::MubProduct, 2, 1);
  CHECK(channel_eigenvalue(PauliString::parse("ZI"), spec) == Rational(1, 3));
  RngStream rng(1005);
  auto est = monte_carlo_m(spec, PauliString::parse("ZX"), 100000, rng);
  CHECK(std::abs(est.estimate - 1.0 / 9.0) < 5 * est.std_error);
}
