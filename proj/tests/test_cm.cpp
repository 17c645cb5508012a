#include <doctest.h>

#include "ecensus/cm.hpp"
#include "helpers.hpp"

using namespace ecensus;

TEST_CASE("validate_cm accepts valid triples and computes the discriminant") {
  CmParams gauss = validate_cm(0, 1, 1);
  CHECK(gauss.disc == -4);
  CmParams eisen = validate_cm(1, 1, 1);
  CHECK(eisen.disc == -3);
}

TEST_CASE("validate_cm names the violated invariant") {
  try {
    validate_cm(2, 1, 1);
    FAIL("expected InvalidCmError");
  } catch (const InvalidCmError& e) {
    CHECK(e.violation == CmViolation::NonNegativeDiscriminant);
  }
  try {
    validate_cm(0, 1, 0);
    FAIL("expected InvalidCmError");
  } catch (const InvalidCmError& e) {
    CHECK(e.violation == CmViolation::NonPositiveW);
  }
  try {
    validate_cm(0, 2, 2);
    FAIL("expected InvalidCmError");
  } catch (const InvalidCmError& e) {
    CHECK(e.violation == CmViolation::NotCoprime);
  }
}

TEST_CASE("bar map coordinate form") {
  const CmParams gauss = validate_cm(0, 1, 1);
  LatticeVector l({1, 0}, {0, 1});
  CHECK(bar(gauss, l) == LatticeVector({0, -1}, {1, 0}));

  LatticeVector zero({0, 0}, {0, 0});
  CHECK(bar(gauss, zero) == zero);

  const CmParams eisen = validate_cm(1, 1, 1);
  LatticeVector l3({1, 0, 0}, {0, 1, 0});
  CHECK(bar(eisen, l3) == LatticeVector({0, -1, 0}, {1, -1, 0}));
}

namespace {

LatticeVector vec_add(const LatticeVector& a, const LatticeVector& b) {
  std::vector<Int> re(a.g()), im(a.g());
  for (int k = 0; k < a.g(); ++k) {
    re[k] = a.real_part[k] + b.real_part[k];
    im[k] = a.tau_part[k] + b.tau_part[k];
  }
  return LatticeVector(re, im);
}

}  // namespace

TEST_CASE("bar is additive and satisfies its minimal polynomial") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 500; ++i) {
    const CmParams cm = testutil::random_cm(rng);
    const int g = (i % 2 == 0) ? 2 : 3;
    LatticeVector a = testutil::random_vector(rng, g, 30);
    LatticeVector b = testutil::random_vector(rng, g, 30);

    CHECK(bar(cm, vec_add(a, b)) == vec_add(bar(cm, a), bar(cm, b)));

    // bar(bar(l)) + u*bar(l) + v*w*l = 0
    LatticeVector b1 = bar(cm, a);
    LatticeVector b2 = bar(cm, b1);
    for (int k = 0; k < g; ++k) {
      CHECK(W(b2.real_part[k]) + W(cm.u) * b1.real_part[k] +
                W(cm.v) * cm.w * a.real_part[k] ==
            W(0));
      CHECK(W(b2.tau_part[k]) + W(cm.u) * b1.tau_part[k] +
                W(cm.v) * cm.w * a.tau_part[k] ==
            W(0));
    }
  }
}

TEST_CASE("quadratic forms at pinned points") {
  const CmParams gauss = validate_cm(0, 1, 1);
  const CmParams eisen = validate_cm(1, 1, 1);
  CHECK(q2(gauss, 1, 1) == 2);
  CHECK(q2(gauss, 0, 0) == 0);
  CHECK(q2(eisen, 1, 1) == 1);
  CHECK(qform(gauss, 1, 0) == 1);
  CHECK(qform(eisen, 1, -1) == 1);
  CHECK(qform(gauss, 3, 4) == 25);
}

TEST_CASE("q2 and qform are positive definite") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 2000; ++i) {
    const CmParams cm = testutil::random_cm(rng);
    const Int x = static_cast<Int>(rng() % 41) - 20;
    const Int y = static_cast<Int>(rng() % 41) - 20;
    if (x == 0 && y == 0) {
      CHECK(q2(cm, x, y) == 0);
      CHECK(qform(cm, x, y) == 0);
    } else {
      CHECK(q2(cm, x, y) > 0);
      CHECK(qform(cm, x, y) > 0);
    }
  }
}

TEST_CASE("degree numerator") {
  const CmParams gauss = validate_cm(0, 1, 1);
  const Polarization principal({1, 1});
  CHECK(degree_numerator(gauss, principal, LatticeVector({1, 0}, {0, 1})) == 2);
  CHECK(degree_numerator(gauss, principal, LatticeVector({0, 0}, {0, 0})) == 0);
  CHECK(degree_numerator(gauss, Polarization({2, 3}), LatticeVector({1, 1}, {0, 0})) == 5);
  CHECK_THROWS_AS(
      degree_numerator(gauss, Polarization({1, 1, 1}), LatticeVector({1, 0}, {0, 0})),
      DimensionMismatchError);
}

TEST_CASE("degree numerator vanishes only at zero") {
  std::mt19937_64 rng(44);
  for (int i = 0; i < 1000; ++i) {
    const CmParams cm = testutil::random_cm(rng);
    LatticeVector l = testutil::random_vector(rng, 2, 10);
    Int d = degree_numerator(cm, Polarization({1, 2}), l);
    if (l.is_zero())
      CHECK(d == 0);
    else
      CHECK(d > 0);
  }
}

TEST_CASE("rational line membership") {
  const CmParams gauss = validate_cm(0, 1, 1);
  LatticeVector l({1, 0}, {0, 1});

  auto on_line = rational_line_membership(gauss, l, bar(gauss, l));
  REQUIRE(on_line.has_value());
  CHECK(on_line->first == Rat{0, 1});
  CHECK(on_line->second == Rat{1, 1});  // y = w = 1 here

  LatticeVector e1({1, 0}, {0, 0});
  auto scalar = rational_line_membership(gauss, e1, LatticeVector({2, 0}, {0, 0}));
  REQUIRE(scalar.has_value());
  CHECK(scalar->first == Rat{2, 1});
  CHECK(scalar->second == Rat{0, 1});

  CHECK(!rational_line_membership(gauss, e1, LatticeVector({0, 1}, {0, 0})));
  CHECK_THROWS_AS(
      rational_line_membership(gauss, LatticeVector({0, 0}, {0, 0}), e1),
      ZeroVectorError);
}

TEST_CASE("membership maps bar(lambda) to (0, w)") {
  std::mt19937_64 rng(45);
  for (int i = 0; i < 500; ++i) {
    const CmParams cm = testutil::random_cm(rng);
    const int g = (i % 2 == 0) ? 2 : 3;
    LatticeVector l = testutil::random_vector(rng, g, 20);
    if (l.is_zero()) continue;
    auto xy = rational_line_membership(cm, l, bar(cm, l));
    REQUIRE(xy.has_value());
    CHECK(xy->first == Rat{0, 1});
    CHECK(xy->second == Rat{cm.w, 1});
  }
}

TEST_CASE("membership recognizes exact rational combinations") {
  std::mt19937_64 rng(46);
  for (int i = 0; i < 500; ++i) {
    const CmParams cm = testutil::random_cm(rng);
    LatticeVector l = testutil::random_vector(rng, 2, 8);
    if (l.is_zero()) continue;
    // mu = a*lambda + b*tau*lambda with integer a, b: w*mu = w*a*lambda + b*bar(lambda)
    const Int a = static_cast<Int>(rng() % 7) - 3;
    const Int b = static_cast<Int>(rng() % 7) - 3;
    LatticeVector bl = bar(cm, l);
    std::vector<Int> re(2), im(2);
    bool integral = true;
    for (int k = 0; k < 2; ++k) {
      W wre = W(cm.w) * a * l.real_part[k] + W(b) * bl.real_part[k];
      W wim = W(cm.w) * a * l.tau_part[k] + W(b) * bl.tau_part[k];
      if (wre.value() % cm.w != 0 || wim.value() % cm.w != 0) integral = false;
      if (!integral) break;
      re[k] = W::wrap(wre.value() / cm.w).narrow();
      im[k] = W::wrap(wim.value() / cm.w).narrow();
    }
    if (!integral) continue;
    auto xy = rational_line_membership(cm, l, LatticeVector(re, im));
    REQUIRE(xy.has_value());
    CHECK(xy->first == Rat{a, 1});
    CHECK(xy->second == Rat{b, 1});
  }
}
