#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>

#include "ecensus/errors.hpp"

namespace ecensus {

using Int = std::int64_t;

// 128-bit integer with overflow-checked arithmetic. Formulas are evaluated
// in W and narrowed back to Int, so a value that does not fit is a loud
// OverflowError, never a silent wraparound.
class W {
 public:
  constexpr W() = default;
  constexpr W(Int x) : v_(x) {}

  static W wrap(__int128 v) {
    W r;
    r.v_ = v;
    return r;
  }

  __int128 value() const { return v_; }

  Int narrow() const {
    if (v_ > kMax || v_ < kMin)
      throw OverflowError("result does not fit in 64 bits");
    return static_cast<Int>(v_);
  }

  friend W operator+(W a, W b) {
    W r;
    if (__builtin_add_overflow(a.v_, b.v_, &r.v_))
      throw OverflowError("integer overflow in +");
    return r;
  }
  friend W operator-(W a, W b) {
    W r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r.v_))
      throw OverflowError("integer overflow in -");
    return r;
  }
  friend W operator*(W a, W b) {
    W r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r.v_))
      throw OverflowError("integer overflow in *");
    return r;
  }
  W operator-() const { return W(0) - *this; }
  W& operator+=(W o) { return *this = *this + o; }
  W& operator-=(W o) { return *this = *this - o; }
  W& operator*=(W o) { return *this = *this * o; }

  friend bool operator==(W a, W b) { return a.v_ == b.v_; }
  friend bool operator!=(W a, W b) { return a.v_ != b.v_; }
  friend bool operator<(W a, W b) { return a.v_ < b.v_; }
  friend bool operator<=(W a, W b) { return a.v_ <= b.v_; }
  friend bool operator>(W a, W b) { return a.v_ > b.v_; }
  friend bool operator>=(W a, W b) { return a.v_ >= b.v_; }

 private:
  static constexpr __int128 kMax = std::numeric_limits<Int>::max();
  static constexpr __int128 kMin = std::numeric_limits<Int>::min();
  __int128 v_ = 0;
};

// Division that must be exact (fraction-free elimination relies on it).
inline W exact_div(W a, W b) {
  if (b == W(0) || a.value() % b.value() != 0)
    throw Error("internal: inexact division in exact integer routine");
  return W::wrap(a.value() / b.value());
}

inline __int128 abs128(__int128 x) { return x < 0 ? -x : x; }

inline __int128 gcd128(__int128 a, __int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline __int128 lcm128(__int128 a, __int128 b) {
  if (a == 0 || b == 0) return 0;
  __int128 g = gcd128(a, b);
  return (W::wrap(a / g) * W::wrap(b)).value();
}

inline Int gcd_i(Int a, Int b) { return W::wrap(gcd128(a, b)).narrow(); }

// gcd of all entries; 0 for the zero vector.
inline Int gcd_span(std::span<const Int> v) {
  __int128 g = 0;
  for (Int x : v) g = gcd128(g, x);
  return W::wrap(g).narrow();
}

// Floor of sqrt(n), exact.
inline Int isqrt(Int n) {
  if (n < 0) throw PreconditionError("isqrt of a negative value");
  if (n == 0) return 0;
  Int r = static_cast<Int>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && W(r) * r > W(n)) --r;
  while (W(r + 1) * (r + 1) <= W(n)) ++r;
  return r;
}

// g = gcd(a, b) >= 0 together with s*a + t*b = g.
struct ExtGcd {
  Int g, s, t;
};

inline ExtGcd extended_gcd(Int a, Int b) {
  __int128 old_r = a, r = b;
  __int128 old_s = 1, s = 0;
  __int128 old_t = 0, t = 1;
  while (r != 0) {
    __int128 q = old_r / r;
    __int128 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {W::wrap(old_r).narrow(), W::wrap(old_s).narrow(),
          W::wrap(old_t).narrow()};
}

// Exact rational in lowest terms with positive denominator.
struct Rat {
  Int num = 0;
  Int den = 1;

  static Rat make(W num, W den) {
    if (den == W(0)) throw Error("zero denominator");
    __int128 n = num.value();
    __int128 d = den.value();
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    return Rat{W::wrap(n).narrow(), W::wrap(d).narrow()};
  }

  friend bool operator==(const Rat&, const Rat&) = default;
  bool positive() const { return num > 0; }
  bool negative() const { return num < 0; }
};

}  // namespace ecensus
