#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cliffshadow {

/// Exact rational arithmetic on 128-bit integers.
///
/// All channel eigenvalues, correlation functions and transfer-matrix
/// entries are small rationals; keeping them exact until the final float
/// conversion avoids drift in the inverse-channel coefficients.
class Rational {
public:
  using Int = __int128;

  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

  static Rational from_int128(Int n, Int d) {
    Rational r;
    r.num_ = n;
    r.den_ = d;
    r.normalize();
    return r;
  }

  Int num() const { return num_; }
  Int den() const { return den_; }

  bool is_zero() const { return num_ == 0; }

  Rational operator+(const Rational& o) const {
    return from_int128(checked_add(checked_mul(num_, o.den_), checked_mul(o.num_, den_)),
                       checked_mul(den_, o.den_));
  }
  Rational operator-(const Rational& o) const {
    return from_int128(checked_add(checked_mul(num_, o.den_), -checked_mul(o.num_, den_)),
                       checked_mul(den_, o.den_));
  }
  Rational operator*(const Rational& o) const {
    return from_int128(checked_mul(num_, o.num_), checked_mul(den_, o.den_));
  }
  Rational operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
    return from_int128(checked_mul(num_, o.den_), checked_mul(den_, o.num_));
  }
  Rational operator-() const { return from_int128(-num_, den_); }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const {
    return checked_mul(num_, o.den_) < checked_mul(o.num_, den_);
  }
  bool operator<=(const Rational& o) const { return *this < o || *this == o; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

  Rational pow(unsigned e) const {
    Rational r(1);
    Rational base = *this;
    while (e > 0) {
      if (e & 1u) r *= base;
      base = (e > 1) ? base * base : base;
      e >>= 1;
    }
    return r;
  }

  Rational inverse() const {
    if (num_ == 0) throw std::domain_error("Rational: inverse of zero");
    return from_int128(den_, num_);
  }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  std::string to_string() const;

private:
  Int num_;
  Int den_;

  void normalize();
  static Int checked_mul(Int a, Int b);
  static Int checked_add(Int a, Int b);
};

}  // namespace cliffshadow
