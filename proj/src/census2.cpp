#include "ecensus/census2.hpp"

#include <algorithm>
#include <tuple>

#include "ecensus/ordinary.hpp"
#include "ecensus/parallel.hpp"

namespace ecensus {

const char* kind_name(CurveKind kind) {
  return kind == CurveKind::Ordinary ? "ordinary" : "extra-ordinary";
}

bool check_class2(const CmParams& cm, const std::array<Int, 4>& s) {
  const auto [al, be, ga, eta] = s;
  if (al < 0 || be < 0) return false;
  if (gcd_span(s) != 1) return false;
  return W(al) * be - W(ga) * (W(ga) + W(cm.u) * eta) == W(cm.v) * cm.w * eta * eta;
}

SurfaceClass class_from_lambda2(const CmParams& cm, const LatticeVector& lambda) {
  if (lambda.g() != 2)
    throw DimensionMismatchError("class_from_lambda2 needs a 2-dimensional vector");
  if (!is_primitive(lambda.flat()))
    throw NotPrimitiveError("lambda must be primitive");
  const Int a = lambda.real_part[0], b = lambda.real_part[1];
  const Int c = lambda.tau_part[0], d = lambda.tau_part[1];
  std::array<Int, 4> raw = {
      q2(cm, a, c),
      q2(cm, b, d),
      (W(cm.w) * a * b - W(cm.u) * a * d + W(cm.v) * c * d).narrow(),
      (W(a) * d - W(b) * c).narrow(),
  };
  const Int r = gcd_span(raw);
  return SurfaceClass{raw[0] / r, raw[1] / r, raw[2] / r, raw[3] / r};
}

Int degree2(const Polarization& pol, const SurfaceClass& s) {
  if (pol.g() != 2) throw DimensionMismatchError("degree2 needs 2 multipliers");
  return (W(pol.multipliers[0]) * s.alpha + W(pol.multipliers[1]) * s.beta).narrow();
}

CurveKind classify2(const SurfaceClass& s) {
  return s.eta == 0 ? CurveKind::Ordinary : CurveKind::ExtraOrdinary;
}

std::vector<std::pair<Int, Int>> represent_qform(const CmParams& cm, Int n) {
  std::vector<std::pair<Int, Int>> out;
  if (n < 0) return out;
  if (n == 0) {
    out.emplace_back(0, 0);
    return out;
  }
  const Int d = -cm.disc;  // 4vw - u^2 > 0
  const Int ymax = isqrt((W(4) * n).narrow() / d);
  for (Int y = -ymax; y <= ymax; ++y) {
    // 4*qform(x, y) = (2x + u*y)^2 + d*y^2
    const Int rem = (W(4) * n - W(d) * y * y).narrow();
    if (rem < 0) continue;
    const Int s = isqrt(rem);
    if ((W(s) * s).narrow() != rem) continue;
    const Int lo = (-W(cm.u) * y - s).narrow();
    const Int hi = (-W(cm.u) * y + s).narrow();
    if (lo % 2 == 0) out.emplace_back(lo / 2, y);
    if (s != 0 && hi % 2 == 0) out.emplace_back(hi / 2, y);
  }
  return out;
}

namespace {

bool record_less(const SurfaceRecord& a, const SurfaceRecord& b) {
  return std::tie(a.degree, a.cls) < std::tie(b.degree, b.cls);
}

std::vector<SurfaceRecord> enumerate2_nocm(const Polarization& pol, Int t,
                                           bool with_basis) {
  std::vector<SurfaceRecord> out;
  for (const OrdinaryCurve& oc : enumerate_ordinary(2, pol, t)) {
    const Int v0 = oc.v[0], v1 = oc.v[1];
    SurfaceClass s{(W(v0) * v0).narrow(), (W(v1) * v1).narrow(),
                   (W(v0) * v1).narrow(), 0};
    SurfaceRecord rec{s, degree2(pol, s), CurveKind::Ordinary, std::nullopt};
    if (with_basis)
      rec.basis = LatticeBasis{LatticeVector({v0, v1}, {0, 0}),
                               LatticeVector({0, 0}, {v0, v1})};
    out.push_back(std::move(rec));
  }
  std::sort(out.begin(), out.end(), record_less);
  return out;
}

}  // namespace

std::vector<SurfaceRecord> enumerate2(const CmMode& mode, const Polarization& pol,
                                      Int t, int threads, bool with_basis) {
  if (pol.g() != 2) throw DimensionMismatchError("enumerate2 needs 2 multipliers");
  if (t < 0) return {};
  if (std::holds_alternative<NoCm>(mode)) return enumerate2_nocm(pol, t, with_basis);

  const CmParams& cm = std::get<CmParams>(mode);
  const Int m = pol.multipliers[0], n = pol.multipliers[1];
  const Int amax = t / m;

  std::vector<std::vector<SurfaceRecord>> strata(amax + 1);
  parallel_for(static_cast<std::size_t>(amax) + 1, threads, [&](std::size_t ai) {
    const Int alpha = static_cast<Int>(ai);
    const Int bmax = (t - m * alpha) / n;
    for (Int beta = 0; beta <= bmax; ++beta) {
      for (const auto& [gamma, eta] :
           represent_qform(cm, (W(alpha) * beta).narrow())) {
        const std::array<Int, 4> coords = {alpha, beta, gamma, eta};
        if (gcd_span(coords) != 1) continue;
        SurfaceClass s{alpha, beta, gamma, eta};
        strata[ai].push_back(
            SurfaceRecord{s, degree2(pol, s), classify2(s), std::nullopt});
      }
    }
  });

  std::vector<SurfaceRecord> out;
  for (auto& part : strata)
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  std::sort(out.begin(), out.end(), record_less);
  if (with_basis)
    for (SurfaceRecord& rec : out) rec.basis = reconstruct2(cm, rec.cls);
  return out;
}

IntMat linear_system2(const CmParams& cm, const std::array<Int, 4>& s) {
  const auto [al, be, ga, eta] = s;
  const Int u = cm.u, v = cm.v, w = cm.w;
  const Int geu = (W(ga) + W(u) * eta).narrow();
  return IntMat{
      {(W(w) * eta).narrow(), 0, ga, -al},
      {-geu, al, (W(v) * eta).narrow(), 0},
      {0, (W(w) * eta).narrow(), be, -geu},
      {-be, ga, 0, (W(v) * eta).narrow()},
  };
}

Bivector class_bivector2(const CmParams& cm, const SurfaceClass& s) {
  Bivector out{2, std::vector<Int>(6)};
  out.coords[bivector_index(2, 0, 1)] = (-W(cm.v) * s.eta).narrow();
  out.coords[bivector_index(2, 0, 2)] = s.alpha;
  out.coords[bivector_index(2, 0, 3)] = s.gamma;
  out.coords[bivector_index(2, 1, 2)] = (W(s.gamma) + W(cm.u) * s.eta).narrow();
  out.coords[bivector_index(2, 1, 3)] = s.beta;
  out.coords[bivector_index(2, 2, 3)] = (-W(cm.w) * s.eta).narrow();
  return out;
}

LatticeBasis reconstruct2(const CmParams& cm, const SurfaceClass& s) {
  if (!check_class2(cm, s.coords()))
    throw InvalidClassError("tuple is not a valid surface class");
  const auto kernel = kernel_basis(linear_system2(cm, s.coords()));
  if (kernel.empty()) throw Error("internal: empty kernel for a valid class");
  const std::vector<Int>& lflat = kernel.front();
  const auto mu_flat = solve_wedge(lflat, class_bivector2(cm, s).coords);
  if (!mu_flat) throw Error("internal: wedge system unsolvable for a valid class");
  LatticeVector lambda = LatticeVector::from_flat(lflat);
  LatticeVector mu = LatticeVector::from_flat(*mu_flat);
  const auto xy = rational_line_membership(cm, lambda, mu);
  if (!xy) throw Error("internal: reconstructed basis not on one line");
  if (xy->second.negative())
    for (auto* part : {&mu.real_part, &mu.tau_part})
      for (Int& e : *part) e = -e;
  return {std::move(lambda), std::move(mu)};
}

std::pair<Int, Int> det_identity2(const CmParams& cm, const std::array<Int, 4>& s) {
  const auto [al, be, ga, eta] = s;
  const W defect =
      W(al) * be - W(ga) * (W(ga) + W(cm.u) * eta) - W(cm.v) * cm.w * eta * eta;
  return {det(linear_system2(cm, s)), (-(defect * defect)).narrow()};
}

}  // namespace ecensus
