#include "cliffshadow/verify.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "cliffshadow/bounds.hpp"
#include "cliffshadow/channel.hpp"
#include "cliffshadow/dense_unitary.hpp"
#include "cliffshadow/estimators.hpp"
#include "cliffshadow/experiment.hpp"
#include "cliffshadow/oracles.hpp"
#include "cliffshadow/sampling.hpp"

namespace cliffshadow {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

struct Catalog {
  std::vector<VerifyCheck> checks;
  std::string only_suite;
  std::uint64_t seed;

  bool wants(const std::string& suite) const { return only_suite == "all" || only_suite == suite; }

  void add(const std::string& suite, const std::string& name,
           const std::function<void(VerifyCheck&)>& body) {
    if (!wants(suite)) return;
    VerifyCheck c{suite, name, false, "", ""};
    try {
      body(c);
    } catch (const std::exception& e) {
      c.pass = false;
      c.measured = std::string("exception: ") + e.what();
    }
    checks.push_back(std::move(c));
  }

  void close(VerifyCheck& c, double measured, double expected, double tol) {
    c.measured = fmt(measured);
    c.expected = fmt(expected);
    c.pass = std::abs(measured - expected) <= tol;
  }
  void exact(VerifyCheck& c, const Rational& measured, const Rational& expected) {
    c.measured = measured.to_string();
    c.expected = expected.to_string();
    c.pass = measured == expected;
  }
  void within_sigma(VerifyCheck& c, const MonteCarloEstimate& est, double target, double sigmas) {
    c.measured = fmt(est.estimate) + " +- " + fmt(est.std_error);
    c.expected = fmt(target);
    c.pass = std::abs(est.estimate - target) <= sigmas * est.std_error + 1e-12;
  }
};

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

void register_transfer(Catalog& cat) {
  cat.add("transfer", "G entry (agree,agree): brute-force tau sum vs closed form", [&](VerifyCheck& c) {
    cat.exact(c, g_entries_bruteforce(2).entry[0][0], build_transfer(2).G(0, 0));
  });
  cat.add("transfer", "G entry (agree,differ): brute-force tau sum vs closed form", [&](VerifyCheck& c) {
    cat.exact(c, g_entries_bruteforce(2).entry[0][1], build_transfer(2).G(0, 1));
  });
  cat.add("transfer", "G entry (differ,agree): brute-force tau sum vs closed form", [&](VerifyCheck& c) {
    cat.exact(c, g_entries_bruteforce(2).entry[1][0], build_transfer(2).G(1, 0));
  });
  cat.add("transfer", "G entry (differ,differ): brute-force tau sum vs closed form", [&](VerifyCheck& c) {
    cat.exact(c, g_entries_bruteforce(2).entry[1][1], build_transfer(2).G(1, 1));
  });
  cat.add("transfer", "eigenvalues: closed form vs 2x2 eigensolve (k=2)", [&](VerifyCheck& c) {
    EigenPairD a = lambda_pm(2), b = lambda_pm_eigensolve(2);
    c.measured = fmt(a.plus) + ", " + fmt(a.minus);
    c.expected = fmt(b.plus) + ", " + fmt(b.minus);
    c.pass = std::abs(a.plus - b.plus) < 1e-12 && std::abs(a.minus - b.minus) < 1e-12;
  });
  cat.add("transfer", "eigenvalue sum equals trace of FG (k=2)", [&](VerifyCheck& c) {
    EigenPairD l = lambda_pm(2);
    cat.close(c, l.plus + l.minus, 36.0 / 5.0, 1e-12);
  });
  cat.add("transfer", "eigenvalue product equals det(F) det(G) (k=2)", [&](VerifyCheck& c) {
    EigenPairD l = lambda_pm(2);
    TransferPair t = build_transfer(2);
    cat.close(c, l.plus * l.minus, (t.F.det() * t.G.det()).to_double(), 1e-12);
  });
  for (std::size_t m = 2; m <= 4; ++m) {
    cat.add("transfer", "configuration sum equals Tr((FG)^" + std::to_string(m) + ")",
            [&cat, m](VerifyCheck& c) {
              TransferPair t = build_transfer(2);
              cat.exact(c, config_sum_bruteforce(t.F, t.G, m),
                        (t.F * t.G).pow(static_cast<unsigned>(m)).trace());
            });
  }
  cat.add("transfer", "variance bound at n=4,k=2", [&](VerifyCheck& c) {
    cat.close(c, variance_bound_pbc(4, 2), 107.8125, 1e-9);
  });
}

void register_channel(Catalog& cat) {
  cat.add("channel", "tau table: identity pair", [&](VerifyCheck& c) {
    cat.exact(c, tau_full(PauliString::parse("I"), PauliString::parse("I")), Rational(1));
  });
  cat.add("channel", "tau table: equal nontrivial pair (Z,Z)", [&](VerifyCheck& c) {
    cat.exact(c, tau_full(PauliString::parse("Z"), PauliString::parse("Z")), Rational(1, 3));
  });
  cat.add("channel", "tau table: anticommuting pair (X,Z)", [&](VerifyCheck& c) {
    cat.exact(c, tau_full(PauliString::parse("X"), PauliString::parse("Z")), Rational(0));
  });
  cat.add("channel", "tau table: commuting distinct pair (ZI,IZ)", [&](VerifyCheck& c) {
    cat.exact(c, tau_full(PauliString::parse("ZI"), PauliString::parse("IZ")), Rational(1, 15));
  });
  cat.add("channel", "block eigenvalue 1/3 from the 24-element average", [&](VerifyCheck& c) {
    std::size_t hits = 0;
    for (const auto& u : enumerate_cl1()) {
      if (u.conjugate(PauliString::parse("Z")).is_z_string()) ++hits;
    }
    cat.exact(c, Rational(static_cast<std::int64_t>(hits), 24), m_block(PauliString::parse("ZI"), 1));
  });
  cat.add("channel", "exhaustive channel identity at n=2, k=1", [&](VerifyCheck& c) {
    double worst = 0;
    for (const auto& p : all_paulis(2)) {
      Eigen::MatrixXcd lhs = exhaustive_channel_apply_block_k1(p);
      Eigen::MatrixXcd rhs = m_block(p, 1).to_double() * pauli_to_dense(p);
      worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
    cat.close(c, worst, 0.0, 1e-12);
  });
  cat.add("channel", "brickwork single-qubit eigenvalue 13/125", [&](VerifyCheck& c) {
    EnsembleSpec spec(EnsembleKind::BrickworkPBC, 4, 2);
    cat.exact(c, m_brickwork(PauliString::parse("ZIII"), spec), Rational(13, 125));
  });
  cat.add("channel", "monte carlo eigenvalue at n=4,k=2 (1e5 samples)", [&](VerifyCheck& c) {
    EnsembleSpec spec(EnsembleKind::BrickworkPBC, 4, 2);
    RngStream rng(cat.seed, 11);
    cat.within_sigma(c, monte_carlo_m(spec, PauliString::parse("ZIII"), 100000, rng),
                     13.0 / 125.0, 5.0);
  });
  cat.add("channel", "inverse coefficient 125/13", [&](VerifyCheck& c) {
    ChannelSpectrum s(EnsembleSpec(EnsembleKind::BrickworkPBC, 4, 2));
    cat.close(c, s.inverse_coefficient(PauliString::parse("ZIII")), 125.0 / 13.0, 1e-12);
  });
  cat.add("channel", "eigenvalue floor (2^k+1)^(-n/k) over all 4-qubit Paulis", [&](VerifyCheck& c) {
    EnsembleSpec spec(EnsembleKind::BrickworkPBC, 4, 2);
    Rational floor_val = Rational(1, 25).pow(2);
    bool ok = true;
    Rational worst(1);
    for (const auto& p : all_paulis(4)) {
      Rational m = m_brickwork(p, spec);
      if (m < worst) worst = m;
      if (m < floor_val) ok = false;
    }
    c.pass = ok;
    c.measured = worst.to_string();
    c.expected = ">= " + floor_val.to_string();
  });
  cat.add("channel", "brickwork derivation equals the occupancy contraction", [&](VerifyCheck& c) {
    bool ok = true;
    for (std::size_t m = 1; m <= 4 && ok; ++m) {
      EnsembleSpec spec(EnsembleKind::BrickworkPBC, 2 * m, 2);
      for (std::uint64_t code = 0; code < (std::uint64_t(1) << m); ++code) {
        BitVec x(2 * m), z(2 * m);
        std::vector<bool> pattern(m);
        for (std::size_t i = 0; i < m; ++i) {
          pattern[i] = (code >> i) & 1u;
          if (pattern[i]) z.set(2 * i, true);
        }
        PauliString p(2 * m, std::move(x), std::move(z), false);
        if (m_brickwork(p, spec) != k_contraction(2, pattern)) ok = false;
      }
    }
    c.pass = ok;
    c.measured = ok ? "equal on all patterns, m<=4" : "mismatch";
    c.expected = "equal on all patterns, m<=4";
  });
  cat.add("channel", "open-boundary eigenvalues vs monte carlo", [&](VerifyCheck& c) {
    RngStream rng(cat.seed, 12);
    bool ok = true;
    std::ostringstream ms;
    for (auto kind : {EnsembleKind::BrickworkObcU2Split, EnsembleKind::BrickworkObcU1Split}) {
      EnsembleSpec spec(kind, 4, 2);
      for (const char* s : {"ZIII", "ZZZI"}) {
        PauliString p = PauliString::parse(s);
        double exact = m_brickwork(p, spec).to_double();
        auto est = monte_carlo_m(spec, p, 40000, rng);
        if (std::abs(est.estimate - exact) > 5 * est.std_error + 1e-12) ok = false;
      }
    }
    c.pass = ok;
    c.measured = ok ? "all within 5 sigma" : "deviation beyond 5 sigma";
    c.expected = "all within 5 sigma";
  });
  cat.add("channel", "degenerate block (k=n) correlation equals the full group", [&](VerifyCheck& c) {
    BlockPartition full(2, 2);
    bool ok = true;
    for (const auto& p : all_paulis(2)) {
      for (const auto& q : all_paulis(2)) {
        if (tau_block(p, q, full) != tau_full(p, q)) ok = false;
      }
    }
    c.pass = ok;
    c.measured = ok ? "equal on all 256 pairs" : "mismatch";
    c.expected = "equal on all 256 pairs";
  });
  cat.add("channel", "single-qubit Clifford enumeration has 24 distinct actions", [&](VerifyCheck& c) {
    auto cl1 = enumerate_cl1();
    std::set<std::string> keys;
    for (const auto& t : cl1) keys.insert(t.x_image(0).to_string() + "/" + t.z_image(0).to_string());
    c.measured = std::to_string(keys.size());
    c.expected = "24";
    c.pass = cl1.size() == 24 && keys.size() == 24;
  });
  cat.add("channel", "uniform sampler hits all of Cl(1) uniformly (chi2, 1e5 draws)", [&](VerifyCheck& c) {
    RngStream rng(cat.seed, 13);
    std::map<std::string, std::size_t> counts;
    const std::size_t draws = 100000;
    for (std::size_t i = 0; i < draws; ++i) {
      CliffordTableau t = random_clifford(1, rng);
      counts[t.x_image(0).to_string() + "/" + t.z_image(0).to_string()]++;
    }
    double expected = draws / 24.0;
    double chi2 = 0;
    for (const auto& [key, cnt] : counts) {
      double d = static_cast<double>(cnt) - expected;
      chi2 += d * d / expected;
    }
    c.measured = "chi2 " + fmt(chi2) + " over " + std::to_string(counts.size()) + " cells";
    c.expected = "chi2 < 49.728 (0.999 quantile, 23 df)";
    c.pass = counts.size() == 24 && chi2 < 49.728;
  });
  cat.add("channel", "mub stabilizer classes partition the nontrivial Paulis", [&](VerifyCheck& c) {
    bool ok = true;
    for (std::size_t k : {std::size_t(1), std::size_t(2)}) {
      std::set<std::string> seen;
      auto bases = mub_bases(k);
      if (bases.size() != (std::size_t(1) << k) + 1) ok = false;
      for (const auto& b : bases) {
        for (const auto& p : basis_stabilizer_class(b)) seen.insert(p.to_string());
      }
      if (seen.size() != (std::size_t(1) << (2 * k)) - 1) ok = false;
    }
    c.pass = ok;
    c.measured = ok ? "disjoint cover at k=1,2" : "partition violated";
    c.expected = "disjoint cover at k=1,2";
  });
}

void register_bounds(Catalog& cat) {
  cat.add("bounds", "sum 1/N_P at n=2,k=1: brute force vs closed form", [&](VerifyCheck& c) {
    cat.exact(c, sum_inv_NP_bruteforce(2, 1), sum_inv_NP(2, 1));
  });
  cat.add("bounds", "sum 1/N_P value 100/9", [&](VerifyCheck& c) {
    cat.exact(c, sum_inv_NP(2, 1), Rational(100, 9));
  });
  cat.add("bounds", "per-basis sum 1/N_P^2 at n=2,k=1: brute force vs closed form",
          [&](VerifyCheck& c) {
            cat.exact(c, sum_inv_NP_sq_per_basis_bruteforce(2, 1), sum_inv_NP_sq_per_basis(2, 1));
          });
  cat.add("bounds", "per-basis sum 1/N_P^2 value 100/81", [&](VerifyCheck& c) {
    cat.exact(c, sum_inv_NP_sq_per_basis(2, 1), Rational(100, 81));
  });
  cat.add("bounds", "edge trace Tr(F Gt): matrix product vs closed form 2^{k+1}", [&](VerifyCheck& c) {
    TransferPair t = build_transfer(2);
    ObcPair o = build_obc(2);
    cat.close(c, (t.F * o.G_tilde).trace().to_double(), trace_fg_tilde_closed(2), 1e-12);
  });
  cat.add("bounds", "edge trace Tr(Ft G): matrix product vs stated closed form", [&](VerifyCheck& c) {
    TransferPair t = build_transfer(2);
    ObcPair o = build_obc(2);
    cat.close(c, (o.F_tilde * t.G).trace().to_double(), trace_ftilde_g_closed(2), 1e-9);
  });
  cat.add("bounds", "occupancy eigenvalues: closed form vs eigensolve", [&](VerifyCheck& c) {
    EigenPairD a = mu_pm(2), b = mu_pm_eigensolve(2);
    c.measured = fmt(a.plus) + ", " + fmt(a.minus);
    c.expected = fmt(b.plus) + ", " + fmt(b.minus);
    c.pass = std::abs(a.plus - b.plus) < 1e-12 && std::abs(a.minus - b.minus) < 1e-12;
  });
  cat.add("bounds", "minimum eigenvalue 33/625 at n=4,k=2", [&](VerifyCheck& c) {
    cat.exact(c, min_mp(4, 2), Rational(33, 625));
  });
  cat.add("bounds", "all-ones pattern minimizes the contraction (n/k <= 4)", [&](VerifyCheck& c) {
    bool ok = true;
    for (std::size_t m = 1; m <= 4; ++m) ok = ok && k_contraction_min_at_all_ones(2, m);
    c.pass = ok;
    c.measured = ok ? "minimum at all-ones" : "violated";
    c.expected = "minimum at all-ones";
  });
  cat.add("bounds", "h(X): spectral closed form vs direct trace (m=2..8)", [&](VerifyCheck& c) {
    double worst = 0;
    for (std::size_t m = 2; m <= 8; ++m) {
      for (auto v : {ObcVariant::U2Split, ObcVariant::U1Split}) {
        ObcBound b = variance_bound_obc(2 * m, 2, v);
        worst = std::max(worst, std::abs(b.h - b.h_closed));
      }
    }
    cat.close(c, worst, 0.0, 1e-8);
  });
  cat.add("bounds", "full-rank sample count example (n=2,k=1)", [&](VerifyCheck& c) {
    SampleComplexity sc = sample_complexity(TheoremKind::Thm2FullRank, 2, 1, 4, 0.1, 0.05);
    double cc = 1.0 + std::sqrt(2.0 * std::log(20.0));
    double expected = 9.0 * cc * cc * (25.0 / 9.0) / (0.01 / 4.0);
    cat.close(c, sc.samples, expected, 1e-6 * expected);
  });
  cat.add("bounds", "k=1 machinery gives the 10^n scaling", [&](VerifyCheck& c) {
    bool ok = true;
    for (std::size_t n = 1; n <= 10; ++n) {
      if (variance_amplification(n, 1) * Rational(3).pow(static_cast<unsigned>(n)) !=
          Rational(5).pow(static_cast<unsigned>(n)))
        ok = false;
    }
    c.pass = ok;
    c.measured = ok ? "A(n,1) 3^n = 5^n for n<=10" : "mismatch";
    c.expected = "A(n,1) 3^n = 5^n for n<=10";
  });
}

void register_estimators(Catalog& cat) {
  cat.add("estimators", "single-qubit snapshot closed form diag(2,-1)", [&](VerifyCheck& c) {
    EnsembleSpec spec(EnsembleKind::Block, 1, 1);
    ChannelSpectrum spectrum(spec);
    Snapshot s(CliffordTableau::identity(1), Outcome::from_index(1, 0), spec);
    Eigen::MatrixXcd m = snapshot_to_matrix(s, spectrum);
    Eigen::MatrixXcd want(2, 2);
    want << 2, 0, 0, -1;
    cat.close(c, (m - want).cwiseAbs().maxCoeff(), 0.0, 1e-12);
  });
  cat.add("estimators", "exhaustive unbiasedness of the block estimator (n=2)", [&](VerifyCheck& c) {
    RngStream rng(cat.seed, 21);
    double worst = 0;
    for (std::size_t r : {std::size_t(1), std::size_t(2), std::size_t(4)}) {
      DensityMatrix rho = random_rank_r_state(2, r, rng);
      worst = std::max(worst,
                       (exhaustive_mean_estimator_block_k1(rho) - rho.matrix()).cwiseAbs().maxCoeff());
    }
    cat.close(c, worst, 0.0, 1e-10);
  });
  cat.add("estimators", "generic reconstruction equals the block shortcut", [&](VerifyCheck& c) {
    RngStream rng(cat.seed, 22);
    EnsembleSpec spec(EnsembleKind::Block, 4, 2);
    ChannelSpectrum spectrum(spec);
    DensityMatrix rho = random_rank_r_state(4, 1, rng);
    double worst = 0;
    SnapshotSet set = collect_snapshots(rho, spec, 25, cat.seed + 1);
    for (const auto& s : set.snapshots()) {
      worst = std::max(worst, (snapshot_to_matrix(s, spectrum) - snapshot_to_matrix_block_product(s))
                                  .cwiseAbs()
                                  .maxCoeff());
    }
    cat.close(c, worst, 0.0, 1e-10);
  });
  cat.add("estimators", "snapshot operator norm stays below (2^k+1)^{n/k}", [&](VerifyCheck& c) {
    RngStream rng(cat.seed, 23);
    EnsembleSpec spec(EnsembleKind::BrickworkPBC, 4, 2);
    ChannelSpectrum spectrum(spec);
    DensityMatrix rho = random_rank_r_state(4, 2, rng);
    double worst = 0;
    for_each_snapshot(rho, spec, 1000, cat.seed + 2, 0, [&](std::size_t, const Snapshot& s) {
      Eigen::MatrixXcd m = snapshot_to_matrix(s, spectrum);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
      worst = std::max(worst, es.eigenvalues().cwiseAbs().maxCoeff());
    });
    c.measured = fmt(worst);
    c.expected = "<= 25";
    c.pass = worst <= 25.0 + 1e-9;
  });
  cat.add("estimators", "first layer pulls through the channel inverse", [&](VerifyCheck& c) {
    RngStream rng(cat.seed, 24);
    EnsembleSpec spec(EnsembleKind::BrickworkPBC, 4, 2);
    ChannelSpectrum spectrum(spec);
    DensityMatrix rho = random_rank_r_state(4, 2, rng);
    auto u1_part = spec.layer1_partition();
    auto u2_part = spec.layer2_partition();
    double worst = 0;
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<std::pair<CliffordTableau, std::vector<std::size_t>>> b1, b2;
      for (const auto& q : u1_part.blocks()) b1.emplace_back(random_clifford(2, rng), q);
      for (const auto& q : u2_part.blocks()) b2.emplace_back(random_clifford(2, rng), q);
      CliffordTableau u1 = embed(4, b1), u2 = embed(4, b2);
      CliffordTableau u = compose(u2, u1);
      Outcome b = born_sample(apply_clifford(rho, u), rng);
      Eigen::MatrixXcd direct = snapshot_to_matrix(Snapshot(u, b, spec), spectrum);
      DensityMatrix proj = DensityMatrix::basis_state(4, b.index());
      DensityMatrix y = apply_clifford(proj, inverse(u2));
      Eigen::MatrixXcd minv = Eigen::MatrixXcd::Zero(16, 16);
      for (const auto& p : all_paulis(4)) {
        minv += (pauli_expectation(y, p) / 16.0 * spectrum.inverse_coefficient(p)) *
                pauli_to_dense(p);
      }
      Eigen::MatrixXcd u1d = tableau_to_dense(u1);
      worst = std::max(worst, (direct - u1d.adjoint() * minv * u1d).cwiseAbs().maxCoeff());
    }
    cat.close(c, worst, 0.0, 1e-10);
  });
  cat.add("estimators", "exhaustive mub expectation equals the state (n=1 and n=2)", [&](VerifyCheck& c) {
    RngStream rng(cat.seed, 25);
    double worst = 0;
    for (std::size_t r : {std::size_t(1), std::size_t(2)}) {
      DensityMatrix rho1 = random_rank_r_state(1, r, rng);
      worst = std::max(worst, (exhaustive_mub_expectation(rho1, 1) - rho1.matrix()).cwiseAbs().maxCoeff());
    }
    DensityMatrix rho2 = random_rank_r_state(2, 4, rng);
    worst = std::max(worst, (exhaustive_mub_expectation(rho2, 1) - rho2.matrix()).cwiseAbs().maxCoeff());
    cat.close(c, worst, 0.0, 1e-10);
  });
  cat.add("estimators", "actionable-basis count matches the formula", [&](VerifyCheck& c) {
    RngStream rng(cat.seed, 26);
    DensityMatrix rho = random_rank_r_state(2, 4, rng);
    MubDataset ds = mub_collect(rho, 2, 1, 1, cat.seed + 3);
    BlockPartition part(2, 1);
    bool ok = true;
    for (const auto& p : all_paulis(2)) {
      std::size_t direct = 0;
      for (const auto& rec : ds.records) {
        if (mub_product_tableau(2, 1, rec.basis_index).conjugate(p).is_z_string()) ++direct;
      }
      if (direct != actionable_basis_count(2, 1, block_weight(p, part))) ok = false;
    }
    c.pass = ok;
    c.measured = ok ? "counts match" : "mismatch";
    c.expected = "counts match";
  });
  cat.add("estimators", "global-inverse bias factor (d+1) m_P", [&](VerifyCheck& c) {
    BiasDemoReport rep = run_bias_demo(4, 2, 50000, cat.seed + 4);
    bool biased_hit = std::abs(rep.biased_mean - rep.predicted_factor) < 5 * rep.biased_se;
    bool unbiased_hit = std::abs(rep.unbiased_mean - 1.0) < 5 * rep.unbiased_se;
    c.measured = "biased " + fmt(rep.biased_mean) + ", unbiased " + fmt(rep.unbiased_mean);
    c.expected = "biased " + fmt(rep.predicted_factor) + ", unbiased 1";
    c.pass = biased_hit && unbiased_hit;
  });
}

}  // namespace

std::vector<VerifyCheck> run_verify(const std::string& suite, std::uint64_t seed) {
  if (suite != "all" && suite != "transfer" && suite != "channel" && suite != "bounds" &&
      suite != "estimators")
    throw std::invalid_argument("run_verify: unknown suite '" + suite + "'");
  Catalog cat;
  cat.only_suite = suite;
  cat.seed = seed;
  register_transfer(cat);
  register_channel(cat);
  register_bounds(cat);
  register_estimators(cat);
  return std::move(cat.checks);
}

std::string verify_report(const std::vector<VerifyCheck>& checks) {
  std::ostringstream os;
  os << "suite,check,status,measured,expected\n";
  for (const auto& c : checks) {
    os << c.suite << ",\"" << c.name << "\"," << (c.pass ? "PASS" : "FAIL") << ",\"" << c.measured
       << "\",\"" << c.expected << "\"\n";
  }
  return os.str();
}

bool all_passed(const std::vector<VerifyCheck>& checks) {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

}  // namespace cliffshadow
