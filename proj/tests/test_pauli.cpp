#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cliffshadow/pauli.hpp"
#include "cliffshadow/rational.hpp"

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

TEST_CASE("rational arithmetic stays exact") {
  Rational a(1, 3), b(1, 5);
  CHECK(a + b == Rational(8, 15));
  CHECK(a * b == Rational(1, 15));
  CHECK(a / b == Rational(5, 3));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(2, 5).pow(3) == Rational(8, 125));
  CHECK(Rational(13, 125).inverse() == Rational(125, 13));
  CHECK(Rational(100, 9).to_string() == "100/9");
  CHECK(Rational(7).to_string() == "7");
  CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3.0));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
}

TEST_CASE("pauli parse and format round-trip") {
  for (const char* s : {"XZIY", "-XZIY", "I", "Z", "-YYXX"}) {
    CHECK(PauliString::parse(s).to_string() == s);
  }
  CHECK_THROWS_AS(PauliString::parse("XB"), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::parse("-"), std::invalid_argument);
}

TEST_CASE("hermitian product contract") {
  auto X = PauliString::parse("X");
  auto Z = PauliString::parse("Z");
  auto I = PauliString::parse("I");

  CHECK(multiply(X, X) == I);
  auto prod = multiply_with_phase(X, Z);
  CHECK(prod.i_power == 3);  // XZ = -iY
  CHECK_FALSE(prod.is_hermitian());
  CHECK_THROWS_AS(multiply(X, Z), std::domain_error);

  CHECK(multiply(PauliString::parse("ZI"), PauliString::parse("IZ")) == PauliString::parse("ZZ"));
  CHECK(multiply(PauliString::parse("-ZI"), PauliString::parse("IZ")) == PauliString::parse("-ZZ"));
  CHECK_THROWS_AS(multiply(PauliString::parse("X"), PauliString::parse("XX")), std::invalid_argument);
}

TEST_CASE("commutation matches phase behaviour on all two-qubit pairs") {
  auto paulis = all_paulis(2);
  for (const auto& a : paulis) {
    for (const auto& b : paulis) {
      auto ab = multiply_with_phase(a, b);
      auto ba = multiply_with_phase(b, a);
      CHECK(ab.pauli.equals_up_to_sign(ba.pauli));
      bool comm = commutes(a, b);
      // products agree exactly iff the pair commutes
      CHECK(comm == (ab.i_power == ba.i_power));
      CHECK(comm == ab.is_hermitian());
    }
  }
}

TEST_CASE("dense product homomorphism on one- and two-qubit pairs") {
  for (std::size_t n : {std::size_t(1), std::size_t(2)}) {
    auto paulis = all_paulis(n);
    for (const auto& a : paulis) {
      for (const auto& b : paulis) {
        if (!commutes(a, b)) continue;
        Eigen::MatrixXcd lhs = pauli_to_dense(multiply(a, b));
        Eigen::MatrixXcd rhs = pauli_to_dense(a) * pauli_to_dense(b);
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
      }
    }
  }
}

TEST_CASE("dense forms of the generators") {
  Eigen::MatrixXcd z = pauli_to_dense(PauliString::parse("Z"));
  CHECK(z(0, 0) == std::complex<double>(1, 0));
  CHECK(z(1, 1) == std::complex<double>(-1, 0));
  Eigen::MatrixXcd x = pauli_to_dense(PauliString::parse("X"));
  CHECK(x(0, 1) == std::complex<double>(1, 0));
  CHECK(x(1, 0) == std::complex<double>(1, 0));
  Eigen::MatrixXcd y = pauli_to_dense(PauliString::parse("Y"));
  CHECK(y(0, 1) == std::complex<double>(0, -1));
  CHECK(y(1, 0) == std::complex<double>(0, 1));

  // -(Z tensor X): negated Kronecker product, eigenvalues +-1
  Eigen::MatrixXcd zx = pauli_to_dense(PauliString::parse("-ZX"));
  Eigen::MatrixXcd expect = Eigen::MatrixXcd::Zero(4, 4);
  expect(0, 1) = -1;
  expect(1, 0) = -1;
  expect(2, 3) = 1;
  expect(3, 2) = 1;
  CHECK((zx - expect).cwiseAbs().maxCoeff() < 1e-15);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(zx);
  for (int i = 0; i < 4; ++i) CHECK(std::abs(std::abs(es.eigenvalues()(i)) - 1.0) < 1e-12);

  CHECK_THROWS_AS(pauli_to_dense(PauliString(12)), std::invalid_argument);
}

TEST_CASE("z-string tests") {
  CHECK(PauliString::parse("ZIZ").is_z_string());
  CHECK_FALSE(PauliString::parse("XI").is_z_string());
  CHECK(PauliString(5).is_z_string());
  CHECK(PauliString::z_string(3, 0b101).to_string() == "ZIZ");
  CHECK(PauliString::z_string(3, 0b101).z_index() == 0b101);
}

TEST_CASE("restrict keeps the sub-Pauli and drops the sign") {
  auto p = PauliString::parse("XZI");
  CHECK(restrict_to(p, {1, 2}).to_string() == "ZI");
  auto q = PauliString::parse("-ZZ");
  CHECK(restrict_to(q, {0, 1}).to_string() == "ZZ");
  CHECK(restrict_to(q, {0}).to_string() == "Z");
  CHECK_THROWS_AS(restrict_to(p, {5}), std::out_of_range);
}

TEST_CASE("block weight on aligned and staggered partitions") {
  CHECK(block_weight(PauliString::parse("IIII"), BlockPartition(4, 2)) == 0);
  CHECK(block_weight(PauliString::parse("ZIII"), BlockPartition(4, 2)) == 1);
  CHECK(block_weight(PauliString::parse("ZIIZ"), BlockPartition(4, 2)) == 2);
  // staggered periodic partition of n=4, k=2: blocks {1,2} and {3,0}
  BlockPartition staggered(4, 2, 1, BlockPartition::Boundary::Periodic);
  CHECK(block_weight(PauliString::parse("ZIIZ"), staggered) == 1);
  CHECK(block_weight(PauliString::parse("IZZI"), staggered) == 1);
  CHECK(block_weight(PauliString::parse("IZIZ"), staggered) == 2);
  // single-qubit support always hits exactly one aligned block
  for (std::size_t q = 0; q < 6; ++q) {
    CHECK(block_weight(PauliString::single(6, q, 'Y'), BlockPartition(6, 2)) == 1);
  }
  CHECK_THROWS_AS(block_weight(PauliString(3), BlockPartition(4, 2)), std::invalid_argument);
  CHECK_THROWS_AS(BlockPartition(4, 3), std::invalid_argument);
}

TEST_CASE("open-boundary staggered partition splits the edges") {
  BlockPartition part(8, 4, 2, BlockPartition::Boundary::OpenSplit);
  auto blocks = part.blocks();
  REQUIRE(blocks.size() == 3);
  CHECK(blocks[0] == std::vector<std::size_t>{0, 1});
  CHECK(blocks[1] == std::vector<std::size_t>{2, 3, 4, 5});
  CHECK(blocks[2] == std::vector<std::size_t>{6, 7});
}
