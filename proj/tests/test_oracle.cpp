#include <doctest.h>

#include "ecensus/oracle.hpp"

using namespace ecensus;

namespace {
const CmParams kGauss = validate_cm(0, 1, 1);
const CmParams kEisen = validate_cm(1, 1, 1);
}  // namespace

TEST_CASE("oracle box census matches the equation census at pinned points") {
  auto oracle = oracle_enumerate(kGauss, 2, Polarization({1, 1}), 2, 2);
  std::set<ClassTuple> census;
  for (const auto& r : enumerate2(kGauss, Polarization({1, 1}), 2))
    census.insert(r.cls.tuple());
  CHECK(oracle == census);
  CHECK(oracle.size() == 6);

  auto oracle3 = oracle_enumerate(kGauss, 3, Polarization({1, 1, 1}), 3, 2);
  std::set<ClassTuple> census3;
  for (const auto& r : enumerate3(kGauss, Polarization({1, 1, 1}), 3))
    census3.insert(r.cls.tuple());
  CHECK(oracle3 == census3);
  CHECK(oracle3.size() == 55);

  CHECK(oracle_enumerate(kGauss, 2, Polarization({1, 1}), 0, 2).empty());
}

TEST_CASE("oracle_compare produces clean reports on the pinned instances") {
  auto r1 = oracle_compare(kGauss, 2, Polarization({1, 1}), 4, 3);
  CHECK(r1.passed());
  CHECK(r1.missing_from_census.empty());
  CHECK(r1.roundtrip_failures.empty());

  auto r2 = oracle_compare(kEisen, 2, Polarization({1, 2}), 6, 4);
  CHECK(r2.passed());
  CHECK(r2.missing_from_census.empty());

  auto r3 = oracle_compare(kGauss, 3, Polarization({1, 1, 1}), 3, 2);
  CHECK(r3.passed());
  CHECK(r3.oracle_classes == r3.census_classes);
}

TEST_CASE("oracle counts are monotone in the box radius and stabilize") {
  const Polarization pol({1, 1});
  std::size_t prev = 0;
  std::size_t census_size = enumerate2(kGauss, pol, 4).size();
  for (Int box = 1; box <= 4; ++box) {
    auto classes = oracle_enumerate(kGauss, 2, pol, 4, box);
    CHECK(classes.size() >= prev);
    CHECK(classes.size() <= census_size);
    prev = classes.size();
  }
  CHECK(prev == census_size);
}

TEST_CASE("oracle box enumeration is thread invariant") {
  auto a = oracle_box_classes(kEisen, 2, 3, 1);
  auto b = oracle_box_classes(kEisen, 2, 3, 4);
  CHECK(a == b);
}
