#include "ecensus/census3.hpp"

#include <algorithm>
#include <tuple>

#include "ecensus/ordinary.hpp"
#include "ecensus/parallel.hpp"

namespace ecensus {

namespace {

struct Quadratics {
  W r1, r2, r3;  // residuals of the three quadratic relations
};

Quadratics quadratic_residuals(const CmParams& cm, const std::array<Int, 9>& s) {
  const auto [al, be, ga, de, ep, ze, eta, th, io] = s;
  const W vw = W(cm.v) * cm.w;
  return {
      W(al) * be - W(de) * (W(de) + W(cm.u) * eta) - vw * eta * eta,
      W(be) * ga - W(ze) * (W(ze) + W(cm.u) * io) - vw * io * io,
      W(al) * ga - W(ep) * (W(ep) + W(cm.u) * th) - vw * th * th,
  };
}

W cubic_defect(const CmParams& cm, const std::array<Int, 9>& s) {
  const auto [al, be, ga, de, ep, ze, eta, th, io] = s;
  const W u = cm.u;
  const W vw = W(cm.v) * cm.w;
  const W lhs = W(2) * al * be * ga;
  const W rhs = W(de) * (W(ep) + u * th) * ze +
                (W(de) + u * eta) * ep * (W(ze) + u * io) +
                vw * ((W(2) * de + u * eta) * th * io -
                      (W(2) * ep + u * th) * eta * io +
                      (W(2) * ze + u * io) * eta * th);
  return lhs - rhs;
}

}  // namespace

bool check_class3(const CmParams& cm, const std::array<Int, 9>& s) {
  if (s[0] < 0 || s[1] < 0 || s[2] < 0) return false;
  if (gcd_span(s) != 1) return false;
  const Quadratics q = quadratic_residuals(cm, s);
  if (q.r1 != W(0) || q.r2 != W(0) || q.r3 != W(0)) return false;
  return cubic_defect(cm, s) == W(0);
}

ThreefoldClass class_from_lambda3(const CmParams& cm, const LatticeVector& lambda) {
  if (lambda.g() != 3)
    throw DimensionMismatchError("class_from_lambda3 needs a 3-dimensional vector");
  if (!is_primitive(lambda.flat()))
    throw NotPrimitiveError("lambda must be primitive");
  const Int a = lambda.real_part[0], b = lambda.real_part[1], c = lambda.real_part[2];
  const Int d = lambda.tau_part[0], e = lambda.tau_part[1], f = lambda.tau_part[2];
  const Int u = cm.u, v = cm.v, w = cm.w;
  std::array<Int, 9> raw = {
      q2(cm, a, d),
      q2(cm, b, e),
      q2(cm, c, f),
      (W(w) * a * b - W(u) * a * e + W(v) * d * e).narrow(),
      (W(w) * a * c - W(u) * a * f + W(v) * d * f).narrow(),
      (W(w) * b * c - W(u) * b * f + W(v) * e * f).narrow(),
      (W(a) * e - W(b) * d).narrow(),
      (W(a) * f - W(c) * d).narrow(),
      (W(b) * f - W(c) * e).narrow(),
  };
  const Int r = gcd_span(raw);
  ThreefoldClass out;
  out.alpha = raw[0] / r;
  out.beta = raw[1] / r;
  out.gamma = raw[2] / r;
  out.delta = raw[3] / r;
  out.epsilon = raw[4] / r;
  out.zeta = raw[5] / r;
  out.eta = raw[6] / r;
  out.theta = raw[7] / r;
  out.iota = raw[8] / r;
  return out;
}

Int degree3(const Polarization& pol, const ThreefoldClass& s) {
  if (pol.g() != 3) throw DimensionMismatchError("degree3 needs 3 multipliers");
  return (W(pol.multipliers[0]) * s.alpha + W(pol.multipliers[1]) * s.beta +
          W(pol.multipliers[2]) * s.gamma)
      .narrow();
}

CurveKind classify3(const ThreefoldClass& s) {
  return (s.eta == 0 && s.theta == 0 && s.iota == 0) ? CurveKind::Ordinary
                                                     : CurveKind::ExtraOrdinary;
}

namespace {

bool record_less(const ThreefoldRecord& a, const ThreefoldRecord& b) {
  return std::tie(a.degree, a.cls) < std::tie(b.degree, b.cls);
}

std::vector<ThreefoldRecord> enumerate3_nocm(const Polarization& pol, Int t,
                                             bool with_basis) {
  std::vector<ThreefoldRecord> out;
  for (const OrdinaryCurve& oc : enumerate_ordinary(3, pol, t)) {
    const Int v0 = oc.v[0], v1 = oc.v[1], v2 = oc.v[2];
    ThreefoldClass s;
    s.alpha = (W(v0) * v0).narrow();
    s.beta = (W(v1) * v1).narrow();
    s.gamma = (W(v2) * v2).narrow();
    s.delta = (W(v0) * v1).narrow();
    s.epsilon = (W(v0) * v2).narrow();
    s.zeta = (W(v1) * v2).narrow();
    ThreefoldRecord rec{s, degree3(pol, s), CurveKind::Ordinary, std::nullopt};
    if (with_basis)
      rec.basis = LatticeBasis{LatticeVector({v0, v1, v2}, {0, 0, 0}),
                               LatticeVector({0, 0, 0}, {v0, v1, v2})};
    out.push_back(std::move(rec));
  }
  std::sort(out.begin(), out.end(), record_less);
  return out;
}

}  // namespace

std::vector<ThreefoldRecord> enumerate3(const CmMode& mode, const Polarization& pol,
                                        Int t, int threads, bool with_basis) {
  if (pol.g() != 3) throw DimensionMismatchError("enumerate3 needs 3 multipliers");
  if (t < 0) return {};
  if (std::holds_alternative<NoCm>(mode)) return enumerate3_nocm(pol, t, with_basis);

  const CmParams& cm = std::get<CmParams>(mode);
  const Int m = pol.multipliers[0], n = pol.multipliers[1], p = pol.multipliers[2];
  const Int amax = t / m;

  std::vector<std::vector<ThreefoldRecord>> strata(amax + 1);
  parallel_for(static_cast<std::size_t>(amax) + 1, threads, [&](std::size_t ai) {
    const Int alpha = static_cast<Int>(ai);
    const Int bmax = (t - m * alpha) / n;
    for (Int beta = 0; beta <= bmax; ++beta) {
      const auto sols_de = represent_qform(cm, (W(alpha) * beta).narrow());
      const Int gmax = (t - m * alpha - n * beta) / p;
      for (Int gamma = 0; gamma <= gmax; ++gamma) {
        const auto sols_zi = represent_qform(cm, (W(beta) * gamma).narrow());
        const auto sols_et = represent_qform(cm, (W(alpha) * gamma).narrow());
        for (const auto& [de, eta] : sols_de)
          for (const auto& [ze, io] : sols_zi)
            for (const auto& [ep, th] : sols_et) {
              const std::array<Int, 9> coords = {alpha, beta, gamma, de, ep,
                                                 ze,    eta,  th,    io};
              if (cubic_defect(cm, coords) != W(0)) continue;
              if (gcd_span(coords) != 1) continue;
              ThreefoldClass s;
              s.alpha = alpha;
              s.beta = beta;
              s.gamma = gamma;
              s.delta = de;
              s.epsilon = ep;
              s.zeta = ze;
              s.eta = eta;
              s.theta = th;
              s.iota = io;
              strata[ai].push_back(
                  ThreefoldRecord{s, degree3(pol, s), classify3(s), std::nullopt});
            }
      }
    }
  });

  std::vector<ThreefoldRecord> out;
  for (auto& part : strata)
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  std::sort(out.begin(), out.end(), record_less);
  if (with_basis)
    for (ThreefoldRecord& rec : out) rec.basis = reconstruct3(cm, rec.cls);
  return out;
}

IntMat linear_system3(const CmParams& cm, const std::array<Int, 9>& s) {
  const auto [al, be, ga, de, ep, ze, eta, th, io] = s;
  const Int u = cm.u, v = cm.v, w = cm.w;
  auto cw = [&](W x) { return x.narrow(); };
  return IntMat{
      {cw(W(w) * eta), 0, 0, de, -al, 0},
      {cw(-(W(de) + W(u) * eta)), al, 0, cw(W(v) * eta), 0, 0},
      {0, cw(W(w) * io), 0, 0, ze, -be},
      {0, cw(-(W(ze) + W(u) * io)), be, 0, cw(W(v) * io), 0},
      {-ga, 0, ep, 0, 0, cw(W(v) * th)},
      {0, 0, cw(W(w) * th), ga, 0, cw(-(W(ep) + W(u) * th))},
  };
}

namespace {

// All four rows of the surface system for one coordinate pair, embedded
// into the six threefold columns. Used for classes with a vanishing
// diagonal entry, where the 6x6 system degenerates.
void append_minor_rows(IntMat& m, const CmParams& cm, const std::array<Int, 4>& s,
                       const std::array<int, 4>& cols) {
  for (const auto& row : linear_system2(cm, s)) {
    std::vector<Int> full(6, 0);
    for (int k = 0; k < 4; ++k) full[cols[k]] = row[k];
    m.push_back(std::move(full));
  }
}

IntMat stacked_system3(const CmParams& cm, const std::array<Int, 9>& s) {
  const auto [al, be, ga, de, ep, ze, eta, th, io] = s;
  IntMat m;
  m.reserve(12);
  append_minor_rows(m, cm, {al, be, de, eta}, {0, 1, 3, 4});
  append_minor_rows(m, cm, {be, ga, ze, io}, {1, 2, 4, 5});
  append_minor_rows(m, cm, {al, ga, ep, th}, {0, 2, 3, 5});
  return m;
}

}  // namespace

Bivector class_bivector3(const CmParams& cm, const ThreefoldClass& s) {
  const Int u = cm.u, v = cm.v, w = cm.w;
  Bivector out{3, std::vector<Int>(15)};
  auto set = [&](int i, int j, W val) {
    out.coords[bivector_index(3, i, j)] = val.narrow();
  };
  set(0, 1, -W(v) * s.eta);
  set(0, 2, -W(v) * s.theta);
  set(0, 3, s.alpha);
  set(0, 4, s.delta);
  set(0, 5, s.epsilon);
  set(1, 2, -W(v) * s.iota);
  set(1, 3, W(s.delta) + W(u) * s.eta);
  set(1, 4, s.beta);
  set(1, 5, s.zeta);
  set(2, 3, W(s.epsilon) + W(u) * s.theta);
  set(2, 4, W(s.zeta) + W(u) * s.iota);
  set(2, 5, s.gamma);
  set(3, 4, -W(w) * s.eta);
  set(3, 5, -W(w) * s.theta);
  set(4, 5, -W(w) * s.iota);
  return out;
}

LatticeBasis reconstruct3(const CmParams& cm, const ThreefoldClass& s) {
  if (!check_class3(cm, s.coords()))
    throw InvalidClassError("tuple is not a valid threefold class");
  const bool nondegenerate = s.alpha != 0 && s.beta != 0 && s.gamma != 0;
  const IntMat system = nondegenerate ? linear_system3(cm, s.coords())
                                      : stacked_system3(cm, s.coords());
  const auto kernel = kernel_basis(system);
  if (kernel.empty()) throw Error("internal: empty kernel for a valid class");
  const std::vector<Int>& lflat = kernel.front();
  const auto mu_flat = solve_wedge(lflat, class_bivector3(cm, s).coords);
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

std::pair<Int, Int> det_identity3(const CmParams& cm, const std::array<Int, 9>& s) {
  const Quadratics q = quadratic_residuals(cm, s);
  if (q.r1 != W(0) || q.r2 != W(0) || q.r3 != W(0))
    throw PreconditionError("tuple must satisfy the three quadratic relations");
  const W rhs = W(s[0]) * s[1] * s[2] * cubic_defect(cm, s);
  return {det(linear_system3(cm, s)), rhs.narrow()};
}

}  // namespace ecensus
