#include "ecensus/ordinary.hpp"

#include <algorithm>
#include <tuple>

#include "ecensus/census3.hpp"

namespace ecensus {

std::vector<OrdinaryCurve> enumerate_ordinary(int g, const Polarization& pol, Int t) {
  if (g != 2 && g != 3) throw DimensionMismatchError("g must be 2 or 3");
  if (pol.g() != g) throw DimensionMismatchError("polarization size must equal g");
  std::vector<OrdinaryCurve> out;
  if (t < 0) return out;

  std::vector<Int> bound(g), v(g);
  for (int i = 0; i < g; ++i) bound[i] = isqrt(t / pol.multipliers[i]);

  // Odometer over the coordinate box.
  for (int i = 0; i < g; ++i) v[i] = -bound[i];
  for (;;) {
    W deg = 0;
    for (int i = 0; i < g; ++i) deg += W(pol.multipliers[i]) * v[i] * v[i];
    if (deg <= W(t)) {
      int first = 0;
      while (first < g && v[first] == 0) ++first;
      if (first < g && v[first] > 0 && is_primitive(v)) out.push_back({v});
    }
    int pos = g - 1;
    while (pos >= 0 && v[pos] == bound[pos]) {
      v[pos] = -bound[pos];
      --pos;
    }
    if (pos < 0) break;
    ++v[pos];
  }

  auto degree_of = [&](const OrdinaryCurve& c) {
    W deg = 0;
    for (int i = 0; i < g; ++i) deg += W(pol.multipliers[i]) * c.v[i] * c.v[i];
    return deg.narrow();
  };
  std::sort(out.begin(), out.end(), [&](const OrdinaryCurve& a, const OrdinaryCurve& b) {
    return std::make_tuple(degree_of(a), a.v) < std::make_tuple(degree_of(b), b.v);
  });
  return out;
}

ClassTuple ordinary_class(const CmParams& cm, const OrdinaryCurve& curve) {
  const int g = static_cast<int>(curve.v.size());
  if (g != 2 && g != 3) throw DimensionMismatchError("g must be 2 or 3");
  if (!is_primitive(curve.v)) throw NotPrimitiveError("v must be primitive");
  LatticeVector lambda(curve.v, std::vector<Int>(g, 0));
  if (g == 2) return class_from_lambda2(cm, lambda).tuple();
  return class_from_lambda3(cm, lambda).tuple();
}

EndomorphismReport class_from_endomorphism_vector(
    const CmParams& cm, const Polarization& pol,
    std::span<const std::pair<Int, Int>> phi) {
  const int g = static_cast<int>(phi.size());
  if (g != 2 && g != 3) throw DimensionMismatchError("g must be 2 or 3");
  if (pol.g() != g) throw DimensionMismatchError("polarization size must equal g");
  bool all_zero = true;
  for (const auto& [x, y] : phi)
    if (x != 0 || y != 0) all_zero = false;
  if (all_zero) throw ZeroMapError("the zero map defines no curve");

  std::vector<Int> re(g), im(g);
  for (int i = 0; i < g; ++i) {
    re[i] = phi[i].first;
    im[i] = (W(cm.w) * phi[i].second).narrow();
  }
  std::vector<Int> flat = re;
  flat.insert(flat.end(), im.begin(), im.end());
  const Int c = content(flat);
  for (Int& e : re) e /= c;
  for (Int& e : im) e /= c;
  LatticeVector lambda(std::move(re), std::move(im));

  EndomorphismReport rep;
  if (g == 2) {
    SurfaceClass s = class_from_lambda2(cm, lambda);
    rep.class_coords = s.tuple();
    rep.class_degree = degree2(pol, s);
    rep.kind = classify2(s);
  } else {
    ThreefoldClass s = class_from_lambda3(cm, lambda);
    rep.class_coords = s.tuple();
    rep.class_degree = degree3(pol, s);
    rep.kind = classify3(s);
  }
  W endo = 0;
  for (int i = 0; i < g; ++i) {
    const auto& [x, y] = phi[i];
    endo += W(pol.multipliers[i]) *
            (W(x) * x - W(cm.u) * x * y + W(cm.v) * cm.w * y * y);
  }
  rep.endo_degree = endo.narrow();
  rep.degrees_match = rep.endo_degree == rep.class_degree;
  return rep;
}

}  // namespace ecensus
