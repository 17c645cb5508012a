#include "ecensus/oracle.hpp"

#include <algorithm>

#include "ecensus/parallel.hpp"

namespace ecensus {

namespace {

Int tuple_degree(const Polarization& pol, const ClassTuple& c) {
  W deg = 0;
  for (int i = 0; i < pol.g(); ++i) deg += W(pol.multipliers[i]) * c[i];
  return deg.narrow();
}

}  // namespace

std::set<ClassTuple> oracle_box_classes(const CmParams& cm, int g, Int box,
                                        int threads) {
  if (g != 2 && g != 3) throw DimensionMismatchError("g must be 2 or 3");
  if (box < 1) throw PreconditionError("box radius must be >= 1");

  const int n = 2 * g;
  const Int side = 2 * box + 1;
  // lambda and -lambda give the same class; fixing the first coordinate
  // nonnegative halves the box.
  std::vector<std::set<ClassTuple>> parts(static_cast<std::size_t>(box) + 1);
  parallel_for(parts.size(), threads, [&](std::size_t idx) {
    std::vector<Int> flat(n);
    flat[0] = static_cast<Int>(idx);
    const bool first_zero = flat[0] == 0;
    std::vector<Int> rest(n - 1, -box);
    for (;;) {
      for (int i = 1; i < n; ++i) flat[i] = rest[i - 1];
      // for first coordinate 0, skip mirror images: first nonzero must be > 0
      bool take = true;
      if (first_zero) {
        int fn = 1;
        while (fn < n && flat[fn] == 0) ++fn;
        take = fn < n && flat[fn] > 0;
      }
      if (take && is_primitive(flat)) {
        LatticeVector lambda = LatticeVector::from_flat(flat);
        if (g == 2)
          parts[idx].insert(class_from_lambda2(cm, lambda).tuple());
        else
          parts[idx].insert(class_from_lambda3(cm, lambda).tuple());
      }
      int pos = n - 2;
      while (pos >= 0 && rest[pos] == box) {
        rest[pos] = -box;
        --pos;
      }
      if (pos < 0) break;
      ++rest[pos];
    }
    (void)side;
  });

  std::set<ClassTuple> out;
  for (auto& part : parts) out.merge(part);
  return out;
}

std::set<ClassTuple> oracle_enumerate(const CmParams& cm, int g,
                                      const Polarization& pol, Int t, Int box,
                                      int threads) {
  if (pol.g() != g) throw DimensionMismatchError("polarization size must equal g");
  std::set<ClassTuple> out;
  for (const ClassTuple& c : oracle_box_classes(cm, g, box, threads))
    if (tuple_degree(pol, c) <= t) out.insert(c);
  return out;
}

OracleReport oracle_compare(const CmParams& cm, int g, const Polarization& pol,
                            Int t, Int box, int threads) {
  OracleReport rep{cm, g, pol, t, box, {}, {}, {}, {}, {}};
  rep.oracle_classes = oracle_enumerate(cm, g, pol, t, box, threads);

  if (g == 2) {
    for (const SurfaceRecord& r : enumerate2(cm, pol, t, threads))
      rep.census_classes.insert(r.cls.tuple());
  } else {
    for (const ThreefoldRecord& r : enumerate3(cm, pol, t, threads))
      rep.census_classes.insert(r.cls.tuple());
  }

  for (const ClassTuple& c : rep.oracle_classes)
    if (!rep.census_classes.count(c)) rep.missing_from_census.push_back(c);

  for (const ClassTuple& c : rep.census_classes) {
    bool roundtrip_ok = false;
    try {
      if (g == 2) {
        SurfaceClass s{c[0], c[1], c[2], c[3]};
        roundtrip_ok = class_from_lambda2(cm, reconstruct2(cm, s).first).tuple() == c;
      } else {
        ThreefoldClass s;
        s.alpha = c[0];
        s.beta = c[1];
        s.gamma = c[2];
        s.delta = c[3];
        s.epsilon = c[4];
        s.zeta = c[5];
        s.eta = c[6];
        s.theta = c[7];
        s.iota = c[8];
        roundtrip_ok = class_from_lambda3(cm, reconstruct3(cm, s).first).tuple() == c;
      }
    } catch (const Error&) {
      roundtrip_ok = false;
    }
    if (!roundtrip_ok)
      rep.roundtrip_failures.push_back(c);
    else if (!rep.oracle_classes.count(c))
      rep.extra_in_census_unwitnessed.push_back(c);
  }
  return rep;
}

}  // namespace ecensus
