#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace cliffshadow {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Deterministic random stream. Streams derived from the same master seed
/// with distinct stream ids are independent and replayable, which is what
/// makes parallel trials bit-reproducible regardless of thread count.
class RngStream {
public:
  explicit RngStream(std::uint64_t seed) : engine_(splitmix64(seed)) {}
  RngStream(std::uint64_t master_seed, std::uint64_t stream_id)
      : engine_(splitmix64(splitmix64(master_seed) ^ splitmix64(stream_id * 0xd6e8feb86659fd93ull + 1))) {}

  std::uint64_t next_u64() { return engine_(); }

  bool next_bit() { return engine_() >> 63; }

  /// Uniform integer in [0, bound). Rejection keeps it exactly uniform.
  std::uint64_t uniform_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("RngStream: zero bound");
    std::uint64_t threshold = (~bound + 1) % bound;  // 2^64 mod bound
    for (;;) {
      std::uint64_t r = engine_();
      if (r >= threshold) return r % bound;
    }
  }

  /// Uniform in [lo, hi] inclusive.
  std::uint64_t uniform_range(std::uint64_t lo, std::uint64_t hi) {
    return lo + uniform_below(hi - lo + 1);
  }

  double uniform_unit() {
    // 53-bit mantissa in [0, 1)
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1, u2;
    do {
      u1 = uniform_unit();
    } while (u1 <= 0.0);
    u2 = uniform_unit();
    double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * M_PI * u2);
    have_spare_ = true;
    return r * std::cos(2.0 * M_PI * u2);
  }

private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace cliffshadow
