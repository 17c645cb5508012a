#include <doctest.h>

#include <random>

#include "ecensus/arith.hpp"

using namespace ecensus;

TEST_CASE("checked wide arithmetic") {
  CHECK((W(3) * 4 + W(5)).narrow() == 17);
  CHECK((-W(7)).narrow() == -7);

  const Int big = std::numeric_limits<Int>::max();
  CHECK_NOTHROW(W(big) * big);                       // fits in 128 bits
  CHECK_THROWS_AS((W(big) * big).narrow(), OverflowError);
  CHECK_THROWS_AS(W::wrap((__int128)1 << 100) * W::wrap((__int128)1 << 60),
                  OverflowError);

  CHECK(exact_div(W(12), W(-4)).narrow() == -3);
  CHECK_THROWS_AS(exact_div(W(7), W(2)), Error);
}

TEST_CASE("gcd helpers") {
  CHECK(gcd_i(12, -18) == 6);
  CHECK(gcd_i(0, 0) == 0);
  std::vector<Int> v = {4, -6, 10};
  CHECK(gcd_span(v) == 2);
  std::vector<Int> z = {0, 0};
  CHECK(gcd_span(z) == 0);
}

TEST_CASE("isqrt is the exact floor square root") {
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(1) == 1);
  CHECK(isqrt(2) == 1);
  CHECK(isqrt(3) == 1);
  CHECK(isqrt(4) == 2);
  CHECK_THROWS_AS(isqrt(-1), PreconditionError);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    Int k = static_cast<Int>(rng() % 3000000000ull);
    CHECK(isqrt((W(k) * k).narrow()) == k);
    if (k > 0) CHECK(isqrt((W(k) * k - W(1)).narrow()) == k - 1);
  }
}

TEST_CASE("extended gcd solves the Bezout identity") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    Int a = static_cast<Int>(rng() % 20001) - 10000;
    Int b = static_cast<Int>(rng() % 20001) - 10000;
    ExtGcd e = extended_gcd(a, b);
    CHECK(e.g == gcd_i(a, b));
    CHECK(W(e.s) * a + W(e.t) * b == W(e.g));
  }
}

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
  Rat r = Rat::make(W(2), W(-4));
  CHECK(r.num == -1);
  CHECK(r.den == 2);
  CHECK(Rat::make(W(0), W(5)) == Rat{0, 1});
  CHECK(Rat::make(W(21), W(7)) == Rat{3, 1});
  CHECK_THROWS_AS(Rat::make(W(1), W(0)), Error);
}
