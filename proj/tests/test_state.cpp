#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cliffshadow/density_matrix.hpp"
#include "cliffshadow/dense_unitary.hpp"
#include "cliffshadow/sampling.hpp"

using namespace cliffshadow;

TEST_CASE("random rank-r states satisfy the state invariants") {
  RngStream rng(11);
  for (std::size_t n : {std::size_t(1), std::size_t(2), std::size_t(3)}) {
    std::size_t d = std::size_t(1) << n;
    for (std::size_t r = 1; r <= d; ++r) {
      DensityMatrix rho = random_rank_r_state(n, r, rng);
      rho.validate();
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.matrix(), Eigen::EigenvaluesOnly);
      std::size_t above = 0;
      for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        if (es.eigenvalues()(i) > 1e-8) ++above;
      }
      CHECK(above == r);
    }
  }
  CHECK_THROWS_AS(random_rank_r_state(2, 0, rng), std::invalid_argument);
  CHECK_THROWS_AS(random_rank_r_state(2, 5, rng), std::invalid_argument);
}

TEST_CASE("pure states have unit purity, full rank bounded below") {
  RngStream rng(12);
  DensityMatrix pure = random_rank_r_state(3, 1, rng);
  CHECK(pure.purity() == doctest::Approx(1.0).epsilon(1e-10));
  DensityMatrix full = random_rank_r_state(2, 4, rng);
  CHECK(full.purity() > 0.25);
  CHECK(full.purity() <= 1.0);
}

TEST_CASE("mean of many full-rank draws approaches the maximally mixed state") {
  RngStream rng(13);
  std::size_t n = 2, d = 4, draws = 1000;
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(d, d);
  for (std::size_t i = 0; i < draws; ++i) acc += random_rank_r_state(n, d, rng).matrix();
  acc /= static_cast<double>(draws);
  // entrywise fluctuations scale like 1/sqrt(draws * d)
  double tol = 5.0 / std::sqrt(static_cast<double>(draws) * d);
  CHECK((acc - Eigen::MatrixXcd::Identity(d, d) / d).cwiseAbs().maxCoeff() < tol);
}

TEST_CASE("apply_clifford matches its dense route and preserves purity") {
  RngStream rng(14);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = 1 + trial % 3;
    DensityMatrix rho = random_rank_r_state(n, 1 + trial % 2, rng);
    CliffordTableau c = random_clifford(n, rng);
    DensityMatrix via_pauli = apply_clifford_pauli_basis(rho, c);
    DensityMatrix via_dense = apply_clifford_dense(rho, c);
    CHECK((via_pauli.matrix() - via_dense.matrix()).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(via_pauli.purity() == doctest::Approx(rho.purity()).epsilon(1e-10));
    via_pauli.validate(1e-8);
  }
}

TEST_CASE("clifford application contract: tr(P U rho U^dag) = tr((U^dag P U) rho)") {
  RngStream rng(15);
  std::size_t n = 2;
  DensityMatrix rho = random_rank_r_state(n, 2, rng);
  CliffordTableau c = random_clifford(n, rng);
  CliffordTableau cinv = inverse(c);
  DensityMatrix rotated = apply_clifford(rho, c);
  const char axes[4] = {'I', 'X', 'Y', 'Z'};
  for (int a0 = 0; a0 < 4; ++a0) {
    for (int a1 = 0; a1 < 4; ++a1) {
      std::string text = {axes[a0], axes[a1]};
      PauliString p = PauliString::parse(text);
      double lhs = pauli_expectation(rotated, p);
      double rhs = pauli_expectation(rho, cinv.conjugate(p));
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    }
  }
}

TEST_CASE("identity tableau leaves states unchanged and H rotates |0> to |+>") {
  DensityMatrix zero = DensityMatrix::basis_state(1, 0);
  CHECK((apply_clifford(zero, CliffordTableau::identity(1)).matrix() - zero.matrix())
            .cwiseAbs()
            .maxCoeff() < 1e-14);
  CliffordTableau h = CliffordTableau::identity(1);
  h.apply_h(0);
  Eigen::MatrixXcd plus(2, 2);
  plus << 0.5, 0.5, 0.5, 0.5;
  CHECK((apply_clifford(zero, h).matrix() - plus).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("born sampling statistics") {
  RngStream rng(16);
  SUBCASE("deterministic on a basis state") {
    DensityMatrix zero = DensityMatrix::basis_state(2, 0);
    for (int i = 0; i < 20; ++i) CHECK(born_sample(zero, rng).index() == 0);
  }
  SUBCASE("uniform on the maximally mixed state, chi-squared at n=3") {
    DensityMatrix mixed = DensityMatrix::maximally_mixed(3);
    std::vector<std::size_t> counts(8, 0);
    const std::size_t draws = 100000;
    for (std::size_t i = 0; i < draws; ++i) counts[born_sample(mixed, rng).index()]++;
    double expected = draws / 8.0;
    double chi2 = 0;
    for (auto c : counts) {
      double dd = c - expected;
      chi2 += dd * dd / expected;
    }
    CHECK(chi2 < 24.322);  // 0.999 quantile, 7 df
  }
  SUBCASE("|+> gives an unbiased coin") {
    CliffordTableau h = CliffordTableau::identity(1);
    h.apply_h(0);
    DensityMatrix plus = apply_clifford(DensityMatrix::basis_state(1, 0), h);
    const std::size_t draws = 100000;
    std::size_t ones = 0;
    for (std::size_t i = 0; i < draws; ++i) ones += born_sample(plus, rng).index();
    double p = static_cast<double>(ones) / draws;
    CHECK(std::abs(p - 0.5) < 5 * std::sqrt(0.25 / draws));
  }
}

TEST_CASE("born sampling composed with rotation matches the rotated diagonal") {
  RngStream rng(17);
  std::size_t n = 2;
  DensityMatrix rho = random_rank_r_state(n, 2, rng);
  CliffordTableau u = random_clifford(n, rng);
  DensityMatrix rotated = apply_clifford(rho, u);
  Eigen::VectorXd probs = born_probabilities(rotated);
  const std::size_t draws = 100000;
  std::vector<std::size_t> counts(4, 0);
  for (std::size_t i = 0; i < draws; ++i) counts[born_sample(rotated, rng).index()]++;
  double chi2 = 0;
  for (std::size_t b = 0; b < 4; ++b) {
    double expected = probs(b) * draws;
    if (expected < 1) continue;
    double dd = counts[b] - expected;
    chi2 += dd * dd / expected;
  }
  CHECK(chi2 < 16.266);  // 0.999 quantile, 3 df
}

TEST_CASE("norms: axioms, known values and ordering chain") {
  DensityMatrix a = DensityMatrix::basis_state(1, 0);
  DensityMatrix b = DensityMatrix::basis_state(1, 1);
  CHECK(trace_distance(a.matrix(), a.matrix()) == doctest::Approx(0.0));
  CHECK(frobenius_distance(a.matrix(), a.matrix()) == doctest::Approx(0.0));
  CHECK(opnorm_distance(a.matrix(), a.matrix()) == doctest::Approx(0.0));
  CHECK(trace_distance(a.matrix(), b.matrix()) == doctest::Approx(2.0));
  CHECK(frobenius_distance(a.matrix(), b.matrix()) == doctest::Approx(std::sqrt(2.0)));
  CHECK(opnorm_distance(a.matrix(), b.matrix()) == doctest::Approx(1.0));

  RngStream rng(18);
  for (int t = 0; t < 30; ++t) {
    std::size_t n = 2;
    std::size_t r = 1 + t % 4;
    DensityMatrix x = random_rank_r_state(n, r, rng);
    DensityMatrix y = random_rank_r_state(n, r, rng);
    double op = opnorm_distance(x.matrix(), y.matrix());
    double fro = frobenius_distance(x.matrix(), y.matrix());
    double tr = trace_distance(x.matrix(), y.matrix());
    CHECK(op <= fro + 1e-12);
    CHECK(fro <= tr + 1e-12);
    CHECK(tr <= 2.0 * r * op + 1e-12);  // difference has rank at most 2r
  }
}

TEST_CASE("eigenvalue norms agree with singular values") {
  RngStream rng(19);
  for (int t = 0; t < 20; ++t) {
    DensityMatrix x = random_rank_r_state(2, 2, rng);
    DensityMatrix y = random_rank_r_state(2, 4, rng);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(x.matrix() - y.matrix());
    const auto& sv = svd.singularValues();
    CHECK(trace_distance(x.matrix(), y.matrix()) == doctest::Approx(sv.sum()).epsilon(1e-10));
    CHECK(frobenius_distance(x.matrix(), y.matrix()) ==
          doctest::Approx(std::sqrt(sv.cwiseAbs2().sum())).epsilon(1e-10));
    CHECK(opnorm_distance(x.matrix(), y.matrix()) == doctest::Approx(sv.maxCoeff()).epsilon(1e-10));
  }
}

TEST_CASE("pauli expectations") {
  DensityMatrix mixed = DensityMatrix::maximally_mixed(2);
  CHECK(pauli_expectation(mixed, PauliString::parse("XZ")) == doctest::Approx(0.0));
  CHECK(pauli_expectation(mixed, PauliString::parse("II")) == doctest::Approx(1.0));
  DensityMatrix zero = DensityMatrix::basis_state(1, 0);
  CHECK(pauli_expectation(zero, PauliString::parse("Z")) == doctest::Approx(1.0));
  RngStream rng(20);
  DensityMatrix rho = random_rank_r_state(2, 3, rng);
  for (const char* s : {"XY", "ZZ", "IX", "YI"}) {
    double v = pauli_expectation(rho, PauliString::parse(s));
    CHECK(v >= -1.0 - 1e-10);
    CHECK(v <= 1.0 + 1e-10);
  }
}

TEST_CASE("state serialization round-trips at full precision") {
  RngStream rng(21);
  DensityMatrix rho = random_rank_r_state(2, 3, rng);
  DensityMatrix back = DensityMatrix::from_text(rho.to_text());
  CHECK((rho.matrix() - back.matrix()).cwiseAbs().maxCoeff() == 0.0);
  CHECK_THROWS_AS(DensityMatrix::from_text("bogus"), std::invalid_argument);
}
