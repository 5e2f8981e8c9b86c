#include "cliffshadow/rational.hpp"

namespace cliffshadow {

namespace {

__int128 abs128(__int128 v) { return v < 0 ? -v : v; }

__int128 gcd128(__int128 a, __int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

void Rational::normalize() {
  if (den_ == 0) throw std::domain_error("Rational: zero denominator");
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  __int128 g = gcd128(num_, den_);
  num_ /= g;
  den_ /= g;
}

Rational::Int Rational::checked_mul(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  Int r = a * b;
  if (r / b != a) throw std::overflow_error("Rational: 128-bit overflow in multiply");
  return r;
}

Rational::Int Rational::checked_add(Int a, Int b) {
  Int r = a + b;
  if ((b > 0 && r < a) || (b < 0 && r > a)) throw std::overflow_error("Rational: 128-bit overflow in add");
  return r;
}

std::string Rational::to_string() const {
  auto print128 = [](Int v) {
    if (v == 0) return std::string("0");
    bool neg = v < 0;
    if (neg) v = -v;
    std::string s;
    while (v > 0) {
      s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
      v /= 10;
    }
    if (neg) s.push_back('-');
    return std::string(s.rbegin(), s.rend());
  };
  if (den_ == 1) return print128(num_);
  return print128(num_) + "/" + print128(den_);
}

}  // namespace cliffshadow
