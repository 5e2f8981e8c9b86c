#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <complex>

#include "cliffshadow/dense_unitary.hpp"
#include "cliffshadow/sampling.hpp"
#include "cliffshadow/tableau.hpp"

using namespace cliffshadow;

namespace {

using Mat = Eigen::MatrixXcd;

// Compare up to a single global phase.
bool same_up_to_phase(const Mat& a, const Mat& b, double tol = 1e-10) {
  Eigen::Index r = 0, c = 0;
  a.cwiseAbs().maxCoeff(&r, &c);
  if (std::abs(b(r, c)) < 1e-12) return false;
  std::complex<double> phase = a(r, c) / b(r, c);
  if (std::abs(std::abs(phase) - 1.0) > tol) return false;
  return (a - phase * b).cwiseAbs().maxCoeff() < tol;
}

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

TEST_CASE("hadamard tableau swaps X and Z") {
  CliffordTableau h = CliffordTableau::identity(1);
  h.apply_h(0);
  CHECK(h.conjugate(PauliString::parse("X")) == PauliString::parse("Z"));
  CHECK(h.conjugate(PauliString::parse("Z")) == PauliString::parse("X"));
  CHECK(h.conjugate(PauliString::parse("Y")) == PauliString::parse("-Y"));
  CHECK(h.conjugate(PauliString::parse("-X")) == PauliString::parse("-Z"));
}

TEST_CASE("identity tableau fixes every Pauli") {
  CliffordTableau id = CliffordTableau::identity(3);
  for (const auto& p : all_paulis(3)) {
    CHECK(id.conjugate(p) == p);
  }
}

TEST_CASE("gate tableaus match the dense gate matrices") {
  const std::complex<double> i(0, 1);

  CliffordTableau h = CliffordTableau::identity(1);
  h.apply_h(0);
  Mat hd(2, 2);
  hd << 1, 1, 1, -1;
  hd /= std::sqrt(2.0);
  CHECK(same_up_to_phase(tableau_to_dense(h), hd));

  CliffordTableau s = CliffordTableau::identity(1);
  s.apply_s(0);
  Mat sd(2, 2);
  sd << 1, 0, 0, i;
  CHECK(same_up_to_phase(tableau_to_dense(s), sd));

  CliffordTableau cx = CliffordTableau::identity(2);
  cx.apply_cx(0, 1);
  Mat cd = Mat::Zero(4, 4);
  cd(0, 0) = 1;
  cd(1, 1) = 1;
  cd(2, 3) = 1;
  cd(3, 2) = 1;
  CHECK(same_up_to_phase(tableau_to_dense(cx), cd));
}

TEST_CASE("tableau conjugation agrees with dense conjugation") {
  RngStream rng(101);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 1 + trial % 3;
    CliffordTableau t = random_clifford(n, rng);
    Mat u = tableau_to_dense(t);
    CHECK((u * u.adjoint() - Mat::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() < 1e-10);
    for (const auto& p : all_paulis(n)) {
      Mat expect = u * pauli_to_dense(p) * u.adjoint();
      Mat got = pauli_to_dense(t.conjugate(p));
      CHECK((expect - got).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("conjugation preserves commutation structure") {
  RngStream rng(7);
  auto paulis = all_paulis(2);
  for (int trial = 0; trial < 30; ++trial) {
    CliffordTableau t = random_clifford(2, rng);
    for (std::size_t a = 0; a < paulis.size(); a += 3) {
      for (std::size_t b = 0; b < paulis.size(); b += 5) {
        CHECK(commutes(paulis[a], paulis[b]) ==
              commutes(t.conjugate(paulis[a]), t.conjugate(paulis[b])));
      }
    }
  }
}

TEST_CASE("compose is the conjugation homomorphism") {
  RngStream rng(33);
  CliffordTableau id = CliffordTableau::identity(2);
  CliffordTableau b = random_clifford(2, rng);
  CHECK(compose(id, b) == b);
  CHECK(compose(b, id) == b);

  for (int trial = 0; trial < 100; ++trial) {
    CliffordTableau u = random_clifford(2, rng);
    CliffordTableau v = random_clifford(2, rng);
    CliffordTableau uv = compose(u, v);
    for (const auto& p : all_paulis(2)) {
      CHECK(uv.conjugate(p) == u.conjugate(v.conjugate(p)));
    }
  }
}

TEST_CASE("inverse round-trips every Pauli") {
  RngStream rng(55);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + trial % 4;
    CliffordTableau t = random_clifford(n, rng);
    CliffordTableau ti = inverse(t);
    CHECK(compose(t, ti).is_identity());
    CHECK(compose(ti, t).is_identity());
    for (const auto& p : all_paulis(n)) {
      CHECK(t.conjugate(ti.conjugate(p)) == p);
    }
  }
}

TEST_CASE("embed places blocks and leaves the rest alone") {
  CliffordTableau h = CliffordTableau::identity(1);
  h.apply_h(0);
  CliffordTableau two = embed(2, {{h, {0}}, {h, {1}}});
  CHECK(two.conjugate(PauliString::parse("XX")) == PauliString::parse("ZZ"));

  RngStream rng(9);
  CliffordTableau blk = random_clifford(2, rng);
  CliffordTableau full = embed(3, {{blk, {0, 1}}});
  CHECK(full.conjugate(PauliString::parse("IIZ")) == PauliString::parse("IIZ"));
  CHECK(full.conjugate(PauliString::parse("IIX")) == PauliString::parse("IIX"));

  CHECK_THROWS_AS(embed(3, {{blk, {0, 1}}, {blk, {1, 2}}}), std::invalid_argument);
  CHECK_THROWS_AS(embed(3, {{blk, {0, 5}}}), std::out_of_range);
}

TEST_CASE("embedding on a wrapped qubit set matches the dense unitary") {
  // block on {3, 0} of a 4-qubit register, as in the staggered wrap
  RngStream rng(123);
  CliffordTableau blk = random_clifford(2, rng);
  CliffordTableau full = embed(4, {{blk, {3, 0}}});

  Mat ub = tableau_to_dense(blk);
  Mat uf = tableau_to_dense(full);
  CHECK((uf * uf.adjoint() - Mat::Identity(16, 16)).cwiseAbs().maxCoeff() < 1e-10);

  // conjugation of Z3 Z0 stays inside the image of the wrapped block
  PauliString z30 = PauliString::parse("ZIIZ");
  PauliString img = full.conjugate(z30);
  for (std::size_t q : {1, 2}) {
    CHECK_FALSE(img.x_bit(q));
    CHECK_FALSE(img.z_bit(q));
  }
  // dense cross-check of the full embedded unitary
  Mat expect = uf * pauli_to_dense(z30) * uf.adjoint();
  CHECK((expect - pauli_to_dense(img)).cwiseAbs().maxCoeff() < 1e-10);
  // the wrapped-block action matches the block acting on its own two qubits
  PauliString local = PauliString::parse("ZZ");  // qubit order {3, 0}
  PauliString local_img = blk.conjugate(local);
  PauliString lifted(4);
  {
    BitVec x(4), z(4);
    x.set(3, local_img.x_bit(0));
    z.set(3, local_img.z_bit(0));
    x.set(0, local_img.x_bit(1));
    z.set(0, local_img.z_bit(1));
    lifted = PauliString(4, std::move(x), std::move(z), local_img.is_negative());
  }
  CHECK(img == lifted);
}

TEST_CASE("tableau text round-trip") {
  RngStream rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    CliffordTableau t = random_clifford(3, rng);
    auto [back, kind] = CliffordTableau::from_text(t.to_text("block"));
    CHECK(back == t);
    CHECK(kind == "block");
  }
  CHECK_THROWS_AS(CliffordTableau::from_text("garbage"), std::invalid_argument);
}

TEST_CASE("from_rows rejects non-symplectic rows") {
  std::vector<PauliString> rows = {PauliString::parse("X"), PauliString::parse("X")};
  CHECK_THROWS_AS(CliffordTableau::from_rows(1, rows), std::invalid_argument);
}
