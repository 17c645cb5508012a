#pragma once

#include <set>

#include "ecensus/census2.hpp"
#include "ecensus/census3.hpp"

namespace ecensus {

// Classes of every primitive lambda with flat coordinates in [-box, box]^(2g),
// deduplicated. No degree filter; the degree of a class is polarization data
// applied by the callers.
std::set<ClassTuple> oracle_box_classes(const CmParams& cm, int g, Int box,
                                        int threads = 1);

// Brute-force ground truth: box classes with degree <= t.
std::set<ClassTuple> oracle_enumerate(const CmParams& cm, int g,
                                      const Polarization& pol, Int t, Int box,
                                      int threads = 1);

struct OracleReport {
  CmParams cm;
  int g;
  Polarization pol;
  Int t;
  Int box;
  std::set<ClassTuple> oracle_classes;
  std::set<ClassTuple> census_classes;
  // Oracle classes the census does not list; must be empty (soundness).
  std::vector<ClassTuple> missing_from_census;
  // Census classes not witnessed inside the box whose reconstructed
  // generator confirms them anyway (informational).
  std::vector<ClassTuple> extra_in_census_unwitnessed;
  // Census classes whose reconstructed generator fails the round trip.
  std::vector<ClassTuple> roundtrip_failures;

  bool passed() const {
    return missing_from_census.empty() && roundtrip_failures.empty();
  }
};

// Soundness: every oracle class appears in the census. Completeness: every
// census class is witnessed by the box or confirmed by reconstruction.
OracleReport oracle_compare(const CmParams& cm, int g, const Polarization& pol,
                            Int t, Int box, int threads = 1);

}  // namespace ecensus
