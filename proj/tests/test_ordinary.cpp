#include <doctest.h>

#include <set>

#include "ecensus/census3.hpp"
#include "ecensus/ordinary.hpp"
#include "helpers.hpp"

using namespace ecensus;

namespace {
const CmParams kGauss = validate_cm(0, 1, 1);
const CmParams kEisen = validate_cm(1, 1, 1);
}  // namespace

TEST_CASE("enumerate_ordinary at pinned points") {
  auto g2 = enumerate_ordinary(2, Polarization({1, 1}), 2);
  std::set<std::vector<Int>> got;
  for (const auto& c : g2) got.insert(c.v);
  CHECK(got == std::set<std::vector<Int>>{{0, 1}, {1, 0}, {1, -1}, {1, 1}});

  CHECK(enumerate_ordinary(3, Polarization({1, 1, 1}), 3).size() == 13);
  CHECK(enumerate_ordinary(2, Polarization({1, 1}), 0).empty());
}

TEST_CASE("enumerate_ordinary output is sorted and normalized") {
  auto curves = enumerate_ordinary(2, Polarization({1, 2}), 20);
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const auto& v = curves[i].v;
    CHECK(is_primitive(v));
    for (Int e : v) {
      if (e == 0) continue;
      CHECK(e > 0);
      break;
    }
    if (i > 0) {
      auto deg = [&](const std::vector<Int>& x) {
        return x[0] * x[0] + 2 * x[1] * x[1];
      };
      CHECK(std::make_pair(deg(curves[i - 1].v), curves[i - 1].v) <
            std::make_pair(deg(v), v));
    }
  }
}

TEST_CASE("ordinary curve count halves the primitive ellipse points") {
  for (Int t : {5, 12, 30}) {
    for (auto mult : {std::vector<Int>{1, 1}, std::vector<Int>{1, 3}}) {
      Int primitive_points = 0;
      for (Int a = -t; a <= t; ++a)
        for (Int b = -t; b <= t; ++b) {
          if (a == 0 && b == 0) continue;
          if (mult[0] * a * a + mult[1] * b * b > t) continue;
          if (gcd_i(a, b) == 1) ++primitive_points;
        }
      auto curves = enumerate_ordinary(2, Polarization(mult), t);
      CHECK(2 * static_cast<Int>(curves.size()) == primitive_points);
    }
  }
}

TEST_CASE("ordinary_class matches the lattice route and ignores the CM data") {
  CHECK(ordinary_class(kGauss, {{1, 1}}) == ClassTuple{1, 1, 1, 0});
  CHECK(ordinary_class(kEisen, {{1, 0}}) == ClassTuple{1, 0, 0, 0});
  CHECK(ordinary_class(kGauss, {{1, 1, 1}}) ==
        ClassTuple{1, 1, 1, 1, 1, 1, 0, 0, 0});
  CHECK(ordinary_class(kGauss, {{2, 3}}) == ordinary_class(kEisen, {{2, 3}}));
  CHECK_THROWS_AS(ordinary_class(kGauss, {{2, 4}}), NotPrimitiveError);
}

TEST_CASE("ordinary curves and eta = 0 census records are in bijection") {
  for (const CmParams& cm : {kGauss, kEisen}) {
    const Polarization pol({1, 2});
    const Int t = 8;
    std::set<ClassTuple> from_ordinary;
    for (const auto& c : enumerate_ordinary(2, pol, t)) {
      ClassTuple tup = ordinary_class(cm, c);
      // degree agreement
      Int vdeg = pol.multipliers[0] * c.v[0] * c.v[0] +
                 pol.multipliers[1] * c.v[1] * c.v[1];
      CHECK(degree2(pol, SurfaceClass{tup[0], tup[1], tup[2], tup[3]}) == vdeg);
      from_ordinary.insert(tup);
    }
    std::set<ClassTuple> from_census;
    for (const auto& r : enumerate2(cm, pol, t))
      if (r.kind == CurveKind::Ordinary) from_census.insert(r.cls.tuple());
    CHECK(from_ordinary == from_census);
  }

  // same for threefolds at desk scale
  const Polarization pol3({1, 1, 1});
  std::set<ClassTuple> from_ordinary3, from_census3;
  for (const auto& c : enumerate_ordinary(3, pol3, 4))
    from_ordinary3.insert(ordinary_class(kGauss, c));
  for (const auto& r : enumerate3(kGauss, pol3, 4))
    if (r.kind == CurveKind::Ordinary) from_census3.insert(r.cls.tuple());
  CHECK(from_ordinary3 == from_census3);
}

TEST_CASE("endomorphism vectors at pinned points") {
  // the pair (1, i)
  auto graph = class_from_endomorphism_vector(
      kGauss, Polarization({1, 1}),
      std::array<std::pair<Int, Int>, 2>{{{1, 0}, {0, 1}}});
  CHECK(graph.class_coords == ClassTuple{1, 1, 0, 1});
  CHECK(graph.class_degree == 2);
  CHECK(graph.endo_degree == 2);
  CHECK(graph.degrees_match);
  CHECK(graph.kind == CurveKind::ExtraOrdinary);

  // the triple (1, 1+i, 0)
  auto triple = class_from_endomorphism_vector(
      kGauss, Polarization({1, 1, 1}),
      std::array<std::pair<Int, Int>, 3>{{{1, 0}, {1, 1}, {0, 0}}});
  CHECK(triple.class_degree == 3);
  CHECK(triple.endo_degree == 3);
  CHECK(triple.degrees_match);

  // multiplication by 2 into the first factor saturates to the factor curve
  auto doubling = class_from_endomorphism_vector(
      kGauss, Polarization({1, 1}),
      std::array<std::pair<Int, Int>, 2>{{{2, 0}, {0, 0}}});
  CHECK(doubling.class_coords == ClassTuple{1, 0, 0, 0});
  CHECK(doubling.class_degree == 1);
  CHECK(doubling.endo_degree == 4);
  CHECK(!doubling.degrees_match);

  // primitive vector that still fails to embed: mult by (1+i) into a factor
  auto nonembed = class_from_endomorphism_vector(
      kGauss, Polarization({1, 1}),
      std::array<std::pair<Int, Int>, 2>{{{1, 1}, {0, 0}}});
  CHECK(nonembed.class_coords == ClassTuple{1, 0, 0, 0});
  CHECK(nonembed.class_degree == 1);
  CHECK(nonembed.endo_degree == 2);
  CHECK(!nonembed.degrees_match);

  CHECK_THROWS_AS(class_from_endomorphism_vector(
                      kGauss, Polarization({1, 1}),
                      std::array<std::pair<Int, Int>, 2>{{{0, 0}, {0, 0}}}),
                  ZeroMapError);
}

TEST_CASE("w scaling: endomorphisms live in Z[w tau]") {
  // u=1, v=1, w=2: tau = (-1 + sqrt(-7)) / 4, End contains Z[2 tau]
  const CmParams cm = validate_cm(1, 1, 2);
  auto rep = class_from_endomorphism_vector(
      cm, Polarization({1, 1}),
      std::array<std::pair<Int, Int>, 2>{{{1, 0}, {0, 1}}});
  // deg(2 tau) = 0 - 0 + v*w = 2
  CHECK(rep.endo_degree == 1 + 2);
  CHECK(rep.degrees_match);
  CHECK(rep.class_degree == 3);
}
