#pragma once

#include <array>

#include "cliffshadow/rational.hpp"

namespace cliffshadow {

/// Exact 2x2 rational matrix; all transfer objects in the bound and
/// channel calculations live here.
struct Rat2x2 {
  std::array<std::array<Rational, 2>, 2> a;

  static Rat2x2 zero() { return Rat2x2{}; }
  static Rat2x2 identity() {
    Rat2x2 m;
    m.a[0][0] = Rational(1);
    m.a[1][1] = Rational(1);
    return m;
  }

  Rational& operator()(int r, int c) { return a[r][c]; }
  const Rational& operator()(int r, int c) const { return a[r][c]; }

  Rat2x2 operator*(const Rat2x2& o) const {
    Rat2x2 m;
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        m.a[r][c] = a[r][0] * o.a[0][c] + a[r][1] * o.a[1][c];
      }
    }
    return m;
  }

  Rational trace() const { return a[0][0] + a[1][1]; }
  Rational det() const { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }

  Rat2x2 pow(unsigned e) const {
    Rat2x2 r = identity();
    Rat2x2 base = *this;
    while (e > 0) {
      if (e & 1u) r = r * base;
      base = (e > 1) ? base * base : base;
      e >>= 1;
    }
    return r;
  }

  bool operator==(const Rat2x2& o) const {
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        if (a[r][c] != o.a[r][c]) return false;
      }
    }
    return true;
  }
};

/// Rational 2-vector for boundary contractions.
struct RatVec2 {
  std::array<Rational, 2> v;
  Rational& operator()(int i) { return v[i]; }
  const Rational& operator()(int i) const { return v[i]; }
};

inline RatVec2 operator*(const RatVec2& u, const Rat2x2& m) {
  RatVec2 r;
  r(0) = u(0) * m(0, 0) + u(1) * m(1, 0);
  r(1) = u(0) * m(0, 1) + u(1) * m(1, 1);
  return r;
}

inline Rational dot(const RatVec2& u, const RatVec2& w) { return u(0) * w(0) + u(1) * w(1); }

}  // namespace cliffshadow
