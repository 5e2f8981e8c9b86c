#include "cliffshadow/channel.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "cliffshadow/sampling.hpp"

namespace cliffshadow {

namespace {

std::int64_t pow2(std::size_t k) {
  if (k > 31) throw std::invalid_argument("channel: block size too large for exact arithmetic");
  return std::int64_t(1) << k;
}

bool nontrivial_on(const PauliString& p, const std::vector<std::size_t>& qubits) {
  for (std::size_t q : qubits) {
    if (p.x_bit(q) || p.z_bit(q)) return true;
  }
  return false;
}

}  // namespace

Rational m_block(const PauliString& p, std::size_t k) {
  BlockPartition part(p.n_qubits(), k);
  std::size_t w = block_weight(p, part);
  return Rational(1, pow2(k) + 1).pow(static_cast<unsigned>(w));
}

Rat2x2 brickwork_weight_matrix(std::size_t k, bool block_nontrivial) {
  Rat2x2 w;
  if (!block_nontrivial) {
    w(0, 0) = Rational(1);
    return w;
  }
  std::int64_t z = pow2(k);
  // joint law of (left half, right half) support of a uniformly random
  // nontrivial block Pauli
  w(0, 1) = Rational(1, z + 1);
  w(1, 0) = Rational(1, z + 1);
  w(1, 1) = Rational(z - 1, z + 1);
  return w;
}

Rat2x2 brickwork_coupling_matrix(std::size_t k) {
  std::int64_t z = pow2(k);
  Rat2x2 c;
  c(0, 0) = Rational(1);
  c(0, 1) = Rational(1, z + 1);
  c(1, 0) = Rational(1, z + 1);
  c(1, 1) = Rational(1, z + 1);
  return c;
}

namespace {

// pattern bit i = 1 iff the Pauli touches block i of the first layer
std::uint64_t support_pattern(const PauliString& p,
                              const std::vector<std::vector<std::size_t>>& blocks) {
  std::uint64_t pattern = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (nontrivial_on(p, blocks[i])) pattern |= std::uint64_t(1) << i;
  }
  return pattern;
}

}  // namespace

Rational channel_eigenvalue_for_pattern(const EnsembleSpec& spec, std::uint64_t pattern) {
  std::size_t k = spec.k;
  std::size_t m = spec.num_blocks();
  if (spec.kind == EnsembleKind::Block || spec.kind == EnsembleKind::MubProduct) {
    return Rational(1, pow2(k) + 1)
        .pow(static_cast<unsigned>(std::popcount(pattern)));
  }
  Rat2x2 c = brickwork_coupling_matrix(k);
  auto hit = [&](std::size_t i) { return ((pattern >> i) & 1u) != 0; };

  if (spec.kind == EnsembleKind::BrickworkPBC) {
    Rat2x2 prod = Rat2x2::identity();
    for (std::size_t i = 0; i < m; ++i) prod = prod * brickwork_weight_matrix(k, hit(i)) * c;
    return prod.trace();
  }
  if (spec.kind == EnsembleKind::BrickworkObcU2Split) {
    // second layer's edge half-blocks weight the boundary occupancies
    std::int64_t half = pow2(k / 2);
    RatVec2 edge;
    edge(0) = Rational(1);
    edge(1) = Rational(1, half + 1);
    RatVec2 acc = edge * brickwork_weight_matrix(k, hit(0));
    for (std::size_t i = 1; i < m; ++i) {
      acc = acc * c;
      acc = acc * brickwork_weight_matrix(k, hit(i));
    }
    return dot(acc, edge);
  }
  // BrickworkObcU1Split: pattern covers the split partition's m+1 blocks,
  // deterministic edge occupancies and full second-layer couplings
  RatVec2 acc;
  acc(hit(0) ? 1 : 0) = Rational(1);
  acc = acc * c;
  for (std::size_t i = 1; i < m; ++i) {
    acc = acc * brickwork_weight_matrix(k, hit(i));
    acc = acc * c;
  }
  return acc(hit(m) ? 1 : 0);
}

Rational m_brickwork(const PauliString& p, const EnsembleSpec& spec) {
  if (!spec.is_brickwork()) throw std::invalid_argument("m_brickwork: not a brickwork spec");
  if (p.n_qubits() != spec.n_qubits) throw std::invalid_argument("m_brickwork: size mismatch");
  return channel_eigenvalue_for_pattern(spec,
                                        support_pattern(p, spec.layer1_partition().blocks()));
}

Rational channel_eigenvalue(const PauliString& p, const EnsembleSpec& spec) {
  if (p.n_qubits() != spec.n_qubits)
    throw std::invalid_argument("channel_eigenvalue: size mismatch");
  switch (spec.kind) {
    case EnsembleKind::Block:
    case EnsembleKind::MubProduct:
      // each block's basis diagonalizes a nontrivial restriction with
      // probability 1/(2^k+1), matching the block ensemble exactly
      return m_block(p, spec.k);
    default:
      return m_brickwork(p, spec);
  }
}

ChannelSpectrum::ChannelSpectrum(EnsembleSpec spec) : spec_(std::move(spec)) {
  pattern_blocks_ = spec_.layer1_partition().blocks();
  std::size_t bits = pattern_blocks_.size();
  if (bits > 20) throw std::invalid_argument("ChannelSpectrum: too many blocks to tabulate");
  std::size_t entries = std::size_t(1) << bits;
  value_by_pattern_.resize(entries);
  inverse_by_pattern_.resize(entries);
  for (std::size_t pattern = 0; pattern < entries; ++pattern) {
    Rational m = channel_eigenvalue_for_pattern(spec_, pattern);
    value_by_pattern_[pattern] = m.to_double();
    inverse_by_pattern_[pattern] = m.is_zero() ? 0.0 : m.inverse().to_double();
  }
}

std::uint64_t ChannelSpectrum::pattern_of(const PauliString& p) const {
  if (p.n_qubits() != spec_.n_qubits)
    throw std::invalid_argument("ChannelSpectrum: size mismatch");
  std::uint64_t pattern = 0;
  for (std::size_t i = 0; i < pattern_blocks_.size(); ++i) {
    for (std::size_t q : pattern_blocks_[i]) {
      if (p.x_bit(q) || p.z_bit(q)) {
        pattern |= std::uint64_t(1) << i;
        break;
      }
    }
  }
  return pattern;
}

double ChannelSpectrum::eigenvalue_double(const PauliString& p) const {
  return value_by_pattern_[pattern_of(p)];
}

double ChannelSpectrum::inverse_coefficient(const PauliString& p) const {
  double inv = inverse_by_pattern_[pattern_of(p)];
  if (inv == 0.0)
    throw std::domain_error("ChannelSpectrum: channel is not invertible at this Pauli");
  return inv;
}

Rational tau_full(const PauliString& p, const PauliString& q) {
  if (p.n_qubits() != q.n_qubits()) throw std::invalid_argument("tau_full: length mismatch");
  std::int64_t d = pow2(p.n_qubits());
  bool pi = p.is_identity();
  bool qi = q.is_identity();
  if (pi && qi) return Rational(1);
  if (pi || qi) return Rational(1, d + 1);
  if (p.equals_up_to_sign(q)) return Rational(1, d + 1);
  if (!commutes(p, q)) return Rational(0);
  return Rational(2) / Rational((d + 1) * (d + 2));
}

Rational tau_block(const PauliString& p, const PauliString& q, const BlockPartition& part) {
  if (p.n_qubits() != part.n_qubits || q.n_qubits() != part.n_qubits)
    throw std::invalid_argument("tau_block: partition incompatible with Pauli length");
  Rational r(1);
  for (const auto& blk : part.blocks()) {
    r *= tau_full(restrict_to(p, blk), restrict_to(q, blk));
    if (r.is_zero()) return r;
  }
  return r;
}

namespace {

CliffordTableau sample_partition_layer(std::size_t n, const BlockPartition& part, RngStream& rng) {
  std::vector<std::pair<CliffordTableau, std::vector<std::size_t>>> blocks;
  for (const auto& qubits : part.blocks())
    blocks.emplace_back(random_clifford(qubits.size(), rng), qubits);
  return embed(n, blocks);
}

MonteCarloEstimate binomial_estimate(std::size_t hits, std::size_t samples) {
  double p = static_cast<double>(hits) / static_cast<double>(samples);
  double se = std::sqrt(p * (1 - p) / static_cast<double>(samples));
  return {p, se, samples};
}

}  // namespace

MonteCarloEstimate monte_carlo_m(const EnsembleSpec& spec, const PauliString& p,
                                 std::size_t samples, RngStream& rng) {
  if (samples < 1) throw std::invalid_argument("monte_carlo_m: need at least one sample");
  std::size_t hits = 0;
  if (spec.kind == EnsembleKind::MubProduct) {
    auto bases = mub_bases(spec.k);
    auto blocks = spec.layer1_partition().blocks();
    for (std::size_t s = 0; s < samples; ++s) {
      std::vector<std::pair<CliffordTableau, std::vector<std::size_t>>> parts;
      for (const auto& blk : blocks)
        parts.emplace_back(bases[rng.uniform_below(bases.size())], blk);
      if (embed(spec.n_qubits, parts).conjugate(p).is_z_string()) ++hits;
    }
    return binomial_estimate(hits, samples);
  }
  for (std::size_t s = 0; s < samples; ++s) {
    if (sample_ensemble(spec, rng).conjugate(p).is_z_string()) ++hits;
  }
  return binomial_estimate(hits, samples);
}

MonteCarloEstimate monte_carlo_tau(const BlockPartition& layer, const PauliString& p,
                                   const PauliString& q, std::size_t samples, RngStream& rng) {
  if (samples < 1) throw std::invalid_argument("monte_carlo_tau: need at least one sample");
  std::size_t hits = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    CliffordTableau u = sample_partition_layer(layer.n_qubits, layer, rng);
    if (u.conjugate(p).is_z_string() && u.conjugate(q).is_z_string()) ++hits;
  }
  return binomial_estimate(hits, samples);
}

}  // namespace cliffshadow
