#include "cliffshadow/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace cliffshadow {

namespace {

std::int64_t pow2(std::size_t k) {
  if (k > 31) throw std::invalid_argument("bounds: block size too large for exact arithmetic");
  return std::int64_t(1) << k;
}

void require_even(std::size_t k) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("bounds: k must be even and >= 2");
}

void require_divides(std::size_t n, std::size_t k) {
  if (k == 0 || n == 0 || n % k != 0) throw std::invalid_argument("bounds: k must divide n");
}

EigenPairD quadratic_eigs(const Rat2x2& m) {
  double tr = m.trace().to_double();
  double det = m.det().to_double();
  double disc = std::sqrt(tr * tr - 4 * det);
  return {(tr + disc) / 2, (tr - disc) / 2};
}

}  // namespace

TransferPair build_transfer(std::size_t k) {
  require_even(k);
  std::int64_t z = pow2(k);
  Rat2x2 f;
  f(0, 0) = Rational(1);
  f(0, 1) = f(1, 0) = f(1, 1) = Rational(1, z - 1);
  Rat2x2 g;
  g(0, 0) = Rational(z * z, z + 1);
  g(0, 1) = g(1, 0) = Rational(z * (z - 1), z + 1);
  g(1, 1) = Rational(z, z + 1) * Rational((z - 1) * (z - 1));
  return {f, g, k};
}

ObcPair build_obc(std::size_t k) {
  require_even(k);
  std::int64_t z = pow2(k);
  std::int64_t w = pow2(k / 2);
  Rat2x2 ft;
  ft(0, 0) = Rational(1);
  ft(0, 1) = ft(1, 0) = Rational(1, w - 1);
  ft(1, 1) = Rational(1, (w - 1) * (w - 1));
  Rat2x2 gt;
  gt(0, 0) = Rational(z);
  gt(0, 1) = gt(1, 0) = Rational(z * (w - 1));
  gt(1, 1) = Rational(z * (w - 1) * (w - 1));
  return {ft, gt, k};
}

KPair build_K(std::size_t k) {
  std::int64_t z = pow2(k);
  Rat2x2 k0;
  k0(0, 0) = Rational(1);
  k0(0, 1) = Rational(1, z + 1);
  Rat2x2 k1;
  Rational denom_sq(1, (z + 1) * (z + 1));
  k1(0, 0) = denom_sq;
  k1(0, 1) = denom_sq;
  k1(1, 0) = Rational(2 * z) * denom_sq;
  k1(1, 1) = Rational(z) * denom_sq;
  return {k0, k1, k};
}

EigenPairD lambda_pm(std::size_t k) {
  require_even(k);
  double z = static_cast<double>(pow2(k));
  double root = std::sqrt(16.0 * z - 7.0);
  double denom = 2.0 * (z + 1.0);
  return {z * (2 * z + 1 + root) / denom, z * (2 * z + 1 - root) / denom};
}

EigenPairD lambda_pm_eigensolve(std::size_t k) {
  TransferPair t = build_transfer(k);
  return quadratic_eigs(t.F * t.G);
}

EigenPairD mu_pm(std::size_t k) {
  double z = static_cast<double>(pow2(k));
  double root = std::sqrt(z * z + 6 * z + 1);
  double denom = 2 * (z + 1) * (z + 1);
  return {(z + 1 + root) / denom, (z + 1 - root) / denom};
}

EigenPairD mu_pm_eigensolve(std::size_t k) { return quadratic_eigs(build_K(k).K1); }

Rational min_mp(std::size_t n, std::size_t k) {
  require_divides(n, k);
  return build_K(k).K1.pow(static_cast<unsigned>(n / k)).trace();
}

double variance_bound_pbc(std::size_t n, std::size_t k) {
  require_divides(n, k);
  require_even(k);
  std::size_t m = n / k;
  double z = static_cast<double>(pow2(k));
  EigenPairD l = lambda_pm(k);
  return std::pow(1.0 + 1.0 / z, 2.0 * m) * (std::pow(l.plus, m) + std::pow(l.minus, m));
}

ObcBound variance_bound_obc(std::size_t n, std::size_t k, ObcVariant variant) {
  require_divides(n, k);
  require_even(k);
  std::size_t m = n / k;
  if (m < 1) throw std::invalid_argument("variance_bound_obc: need at least one block");
  TransferPair t = build_transfer(k);
  ObcPair o = build_obc(k);
  Rat2x2 x = (variant == ObcVariant::U2Split) ? (t.F * o.G_tilde) : (o.F_tilde * t.G);
  Rat2x2 fg = t.F * t.G;

  Rational h_exact = (fg.pow(static_cast<unsigned>(m - 1)) * x).trace();
  EigenPairD l = lambda_pm(k);
  double tr_x = x.trace().to_double();
  double tr_fgx = (fg * x).trace().to_double();
  double ap = (tr_fgx - l.minus * tr_x) / (l.plus - l.minus);
  double am = (tr_fgx - l.plus * tr_x) / (l.minus - l.plus);
  double h_closed = ap * std::pow(l.plus, m - 1) + am * std::pow(l.minus, m - 1);

  double z = static_cast<double>(pow2(k));
  ObcBound out;
  out.h = h_exact.to_double();
  out.h_closed = h_closed;
  out.alpha_plus = ap;
  out.alpha_minus = am;
  out.trace_x = tr_x;
  out.bound = std::pow(1.0 + 1.0 / z, 2.0 * m) * out.h;
  return out;
}

double trace_fg_tilde_closed(std::size_t k) {
  require_even(k);
  return 2.0 * static_cast<double>(pow2(k));
}

double trace_ftilde_g_closed(std::size_t k) {
  require_even(k);
  double z = static_cast<double>(pow2(k));
  double w = static_cast<double>(pow2(k / 2));
  return z / (z + 1) * (z + 4 * w + 3);
}

Rational sum_inv_NP(std::size_t n, std::size_t k) {
  require_divides(n, k);
  std::int64_t z = pow2(k);
  unsigned m = static_cast<unsigned>(n / k);
  // 2^n (4^k + 2^k - 1)^{n/k} / (2^k + 1)^{n/k}
  return Rational(pow2(n)) * Rational(z * z + z - 1, z + 1).pow(m);
}

Rational sum_inv_NP_sq_per_basis(std::size_t n, std::size_t k) {
  require_divides(n, k);
  std::int64_t z = pow2(k);
  unsigned m = static_cast<unsigned>(n / k);
  return Rational(pow2(n)) * Rational(z * z + z - 1).pow(m) /
         Rational(z + 1).pow(2 * m);
}

Rational variance_amplification(std::size_t n, std::size_t k) {
  require_divides(n, k);
  std::int64_t z = pow2(k);
  return Rational(z * z + z - 1, z + 1).pow(static_cast<unsigned>(n / k));
}

TheoremKind theorem_kind_from_string(const std::string& s) {
  if (s == "thm1" || s == "rank-r") return TheoremKind::Thm1RankR;
  if (s == "thm2" || s == "full-rank") return TheoremKind::Thm2FullRank;
  if (s == "appf" || s == "two-layer") return TheoremKind::AppFTwoLayer;
  throw std::invalid_argument("unknown theorem kind: " + s);
}

std::string to_string(TheoremKind t) {
  switch (t) {
    case TheoremKind::Thm1RankR: return "thm1";
    case TheoremKind::Thm2FullRank: return "thm2";
    case TheoremKind::AppFTwoLayer: return "appf";
  }
  throw std::logic_error("to_string: unknown theorem");
}

SampleComplexity sample_complexity(TheoremKind theorem, std::size_t n, std::size_t k,
                                   std::size_t r, double eps_tr, double delta) {
  require_divides(n, k);
  if (eps_tr <= 0) throw std::invalid_argument("sample_complexity: eps must be positive");
  if (delta <= 0 || delta >= 1) throw std::invalid_argument("sample_complexity: delta must lie in (0,1)");
  double d = std::pow(2.0, static_cast<double>(n));
  std::size_t m = n / k;

  SampleComplexity out;
  out.theorem = theorem;
  out.n = n;
  out.k = k;
  out.eps_tr = eps_tr;
  out.delta = delta;
  out.assumption_rankr = static_cast<double>(k) * std::pow(2.0, k / 2.0) >= static_cast<double>(n);
  out.assumption_fullrank = static_cast<double>(k) * std::pow(2.0, static_cast<double>(k)) >=
                            static_cast<double>(n);

  switch (theorem) {
    case TheoremKind::Thm1RankR: {
      if (r < 1 || static_cast<double>(r) > d)
        throw std::invalid_argument("sample_complexity: rank out of range");
      require_even(k);
      out.r = r;
      EigenPairD l = lambda_pm(k);
      out.lambda_plus = l.plus;
      out.lambda_minus = l.minus;
      out.eps_op = eps_tr / (2.0 * static_cast<double>(r));
      out.sigma_sq = std::exp(2.0 + std::sqrt(5.0)) * 2.0 * d;  // exp(2+sqrt5) 2^{n+1}
      out.op_norm_R = std::pow(static_cast<double>((std::int64_t(1) << k) + 1), m);
      // invert d exp(-T e^2 / (sigma^2 + R e / 3)) = delta
      out.samples = (out.sigma_sq + out.op_norm_R * out.eps_op / 3.0) * std::log(d / delta) /
                    (out.eps_op * out.eps_op);
      break;
    }
    case TheoremKind::Thm2FullRank: {
      out.r = std::size_t(1) << n;
      double a = variance_amplification(n, k).to_double();
      double eps_f = eps_tr / std::sqrt(d);
      double c = 1.0 + std::sqrt(2.0 * std::log(1.0 / delta));
      out.amplification = a;
      out.shots_per_basis = c * c * a / (eps_f * eps_f);
      out.basis_count = std::pow(static_cast<double>((std::int64_t(1) << k) + 1), m);
      out.samples = out.shots_per_basis * out.basis_count;
      break;
    }
    case TheoremKind::AppFTwoLayer: {
      require_even(k);
      out.r = std::size_t(1) << n;
      double big_l = min_mp(n, k).inverse().to_double();
      double eps_f = eps_tr / std::sqrt(d);
      out.max_inv_eigenvalue = big_l;
      out.shots_per_unitary = d;  // N_S = 2^n
      double num = std::sqrt(d + out.shots_per_unitary) + std::sqrt(big_l) * std::log(2.0 / delta);
      out.num_unitaries = big_l * num * num / (eps_f * eps_f * out.shots_per_unitary);
      out.samples = out.num_unitaries * out.shots_per_unitary;
      break;
    }
  }
  out.samples_ceil = static_cast<std::uint64_t>(std::ceil(out.samples));
  return out;
}

}  // namespace cliffshadow
