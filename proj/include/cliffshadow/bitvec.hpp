#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cliffshadow {

/// Fixed-length bit vector backed by 64-bit words.  The first word lives
/// inline, so vectors of up to 64 bits never touch the heap.
class BitVec {
public:
  BitVec() : n_(0), word0_(0) {}
  explicit BitVec(std::size_t n) : n_(n), word0_(0) {
    if (n > 64) rest_.assign((n - 1) / 64, 0);
  }

  std::size_t size() const { return n_; }

  bool get(std::size_t i) const { return (word(i >> 6) >> (i & 63)) & 1u; }

  void set(std::size_t i, bool v) {
    std::uint64_t mask = std::uint64_t(1) << (i & 63);
    std::uint64_t& w = word(i >> 6);
    if (v)
      w |= mask;
    else
      w &= ~mask;
  }

  void flip(std::size_t i) { word(i >> 6) ^= std::uint64_t(1) << (i & 63); }

  void xor_with(const BitVec& o) {
    check_same(o);
    word0_ ^= o.word0_;
    for (std::size_t w = 0; w < rest_.size(); ++w) rest_[w] ^= o.rest_[w];
  }

  std::size_t popcount() const {
    std::size_t c = std::popcount(word0_);
    for (auto w : rest_) c += std::popcount(w);
    return c;
  }

  /// popcount(this AND other); the workhorse of symplectic products.
  std::size_t and_popcount(const BitVec& o) const {
    check_same(o);
    std::size_t c = std::popcount(word0_ & o.word0_);
    for (std::size_t w = 0; w < rest_.size(); ++w) c += std::popcount(rest_[w] & o.rest_[w]);
    return c;
  }

  bool any() const {
    if (word0_ != 0) return true;
    for (auto w : rest_) {
      if (w != 0) return true;
    }
    return false;
  }

  void clear() {
    word0_ = 0;
    for (auto& w : rest_) w = 0;
  }

  bool operator==(const BitVec& o) const {
    return n_ == o.n_ && word0_ == o.word0_ && rest_ == o.rest_;
  }
  bool operator!=(const BitVec& o) const { return !(*this == o); }

  std::uint64_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ n_;
    h ^= word0_ + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    for (auto w : rest_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }

private:
  std::size_t n_;
  std::uint64_t word0_;
  std::vector<std::uint64_t> rest_;

  std::uint64_t& word(std::size_t idx) { return idx == 0 ? word0_ : rest_[idx - 1]; }
  const std::uint64_t& word(std::size_t idx) const { return idx == 0 ? word0_ : rest_[idx - 1]; }

  void check_same(const BitVec& o) const {
    if (n_ != o.n_) throw std::invalid_argument("BitVec: length mismatch");
  }
};

}  // namespace cliffshadow
