#include "ecensus/bounds.hpp"

#include <algorithm>
#include <vector>
#include <cmath>
#include <numbers>

namespace ecensus {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInflate = 1.0 + 1e-6;

double trapezoid_periodic(double period, int n, const auto& f) {
  double sum = 0;
  for (int i = 0; i < n; ++i) sum += f(period * i / n);
  return sum * period / n;
}

}  // namespace

double ellipse_perimeter(double a, double b) {
  auto speed = [&](double t) {
    const double s = std::sin(t), c = std::cos(t);
    return std::sqrt(a * a * s * s + b * b * c * c);
  };
  // The integrand is smooth and periodic, so the trapezoid rule converges
  // geometrically; double the grid until the value settles.
  double prev = trapezoid_periodic(2 * kPi, 64, speed);
  for (int n = 128; n <= (1 << 20); n *= 2) {
    double cur = trapezoid_periodic(2 * kPi, n, speed);
    if (std::abs(cur - prev) <= 1e-12 * std::abs(cur)) return cur;
    prev = cur;
  }
  throw Error("ellipse perimeter quadrature did not converge");
}

EllipseGeometry ellipse_geometry(const CmParams& cm) {
  const double u = static_cast<double>(cm.u);
  const double vw = static_cast<double>(cm.v) * static_cast<double>(cm.w);
  const double area = kPi / std::sqrt(vw - 0.25 * u * u);
  // principal axes of the form x^2 + u*x*y + vw*y^2
  const double tr = 1.0 + vw;
  const double root = std::sqrt((vw - 1.0) * (vw - 1.0) + u * u);
  const double e_min = 0.5 * (tr - root);
  const double e_max = 0.5 * (tr + root);
  const double a = 1.0 / std::sqrt(e_min);
  const double b = 1.0 / std::sqrt(e_max);
  return {area, ellipse_perimeter(a, b) * kInflate};
}

double nosarzewska_bound(double area, double perimeter, double t) {
  if (area < 0 || perimeter < 0 || t < 0)
    throw PreconditionError("bound arguments must be nonnegative");
  return area * t + 0.5 * perimeter * std::sqrt(t) + 1.0;
}

double overhagen_bound(double volume, double surface, double mean_curvature,
                       double t) {
  if (volume < 0 || surface < 0 || mean_curvature < 0 || t < 0)
    throw PreconditionError("bound arguments must be nonnegative");
  return volume * std::pow(t, 1.5) + 0.5 * surface * t +
         mean_curvature / kPi * std::sqrt(t) + 1.0;
}

namespace {

struct EllipsoidQuad {
  double surface = 0;
  double curvature = 0;
};

// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

// Surface area and total mean curvature of the ellipsoid with semi-axes
// a, b, c. In the substitution t = cos(theta) the area element becomes
// sqrt((b^2 c^2 cos^2 + a^2 c^2 sin^2)(1 - t^2) + a^2 b^2 t^2) dphi dt,
// analytic in t, so Gauss-Legendre in t converges geometrically; the phi
// direction is smooth periodic and uses the trapezoid rule.
EllipsoidQuad ellipsoid_integrals(double a, double b, double c, int nt, int nphi) {
  const double inv2[3] = {1 / (a * a), 1 / (b * b), 1 / (c * c)};
  const double trace = inv2[0] + inv2[1] + inv2[2];
  std::vector<double> nodes, weights;
  gauss_legendre(nt, nodes, weights);

  double s_total = 0, m_total = 0;
  for (int i = 0; i < nt; ++i) {
    const double t = nodes[i];
    const double s2 = 1.0 - t * t;  // sin^2(theta)
    const double st = std::sqrt(s2);
    double s_row = 0, m_row = 0;
    for (int j = 0; j < nphi; ++j) {
      const double phi = 2 * kPi * j / nphi;
      const double cp = std::cos(phi), sp = std::sin(phi);
      const double element =
          std::sqrt((b * b * c * c * cp * cp + a * a * c * c * sp * sp) * s2 +
                    a * a * b * b * t * t);
      const double x = a * st * cp, y = b * st * sp, z = c * t;
      const double g0 = x * inv2[0], g1 = y * inv2[1], g2 = z * inv2[2];
      const double gg = g0 * g0 + g1 * g1 + g2 * g2;
      const double gh = g0 * g0 * inv2[0] + g1 * g1 * inv2[1] + g2 * g2 * inv2[2];
      const double h = (gg * trace - gh) / (2 * gg * std::sqrt(gg));
      s_row += element;
      m_row += h * element;
    }
    s_total += weights[i] * s_row;
    m_total += weights[i] * m_row;
  }
  const double cell = 2 * kPi / nphi;
  return {s_total * cell, m_total * cell};
}

}  // namespace

EllipsoidGeometry ellipsoid_geometry(const Polarization& pol) {
  if (pol.g() != 3) throw DimensionMismatchError("ellipsoid needs 3 multipliers");
  const double m = static_cast<double>(pol.multipliers[0]);
  const double n = static_cast<double>(pol.multipliers[1]);
  const double p = static_cast<double>(pol.multipliers[2]);
  const double a = 1 / std::sqrt(m), b = 1 / std::sqrt(n), c = 1 / std::sqrt(p);
  const double volume = 4 * kPi / 3 / std::sqrt(m * n * p);

  EllipsoidQuad prev = ellipsoid_integrals(a, b, c, 24, 48);
  for (int n2 = 48; n2 <= (1 << 12); n2 *= 2) {
    EllipsoidQuad cur = ellipsoid_integrals(a, b, c, n2, 2 * n2);
    if (std::abs(cur.surface - prev.surface) <= 1e-11 * cur.surface &&
        std::abs(cur.curvature - prev.curvature) <= 1e-11 * cur.curvature)
      return {volume, cur.surface * kInflate, cur.curvature * kInflate};
    prev = cur;
  }
  throw Error("ellipsoid quadrature did not converge");
}

double trapz_sqrt_bound(Int t) {
  if (t < 1) throw PreconditionError("trapz_sqrt_bound needs t >= 1");
  const double td = static_cast<double>(t);
  return kPi / 8 * td * td - (td - 2) / (6 * td);
}

namespace {

// A*(t'^3 - t')/6 + (L/2)*((pi/8)t'^2 - (t'-2)/(6t')) + tail, with the
// 1/t' term taken as 0 at t' = 0 (empty summation range).
double stratum_sum_bound(double area, double perimeter, Int tprime, double tail) {
  if (tprime == 0) return 0;
  const double tp = static_cast<double>(tprime);
  return area * (tp * tp * tp - tp) / 6.0 +
         0.5 * perimeter * trapz_sqrt_bound(tprime) + tail;
}

}  // namespace

BoundReport census2_bound(const CmMode& mode, const Polarization& pol, Int t) {
  if (pol.g() != 2) throw DimensionMismatchError("census2_bound needs 2 multipliers");
  if (t < 0) throw PreconditionError("t must be nonnegative");
  BoundReport rep;
  rep.kind = "census2_bound";
  rep.t = t;

  if (std::holds_alternative<NoCm>(mode)) {
    const double m = static_cast<double>(pol.multipliers[0]);
    const double n = static_cast<double>(pol.multipliers[1]);
    const double area = kPi / std::sqrt(m * n);
    const double perim =
        ellipse_perimeter(1 / std::sqrt(std::min(m, n)), 1 / std::sqrt(std::max(m, n))) *
        kInflate;
    rep.constants = {{"A", area}, {"L", perim}};
    rep.value = nosarzewska_bound(area, perim, static_cast<double>(t));
    return rep;
  }

  const CmParams& cm = std::get<CmParams>(mode);
  const Int m = std::min(pol.multipliers[0], pol.multipliers[1]);
  const Int tprime = t / m;
  const EllipseGeometry geo = ellipse_geometry(cm);
  const double md = static_cast<double>(m);
  rep.constants = {{"A", geo.area},
                   {"L", geo.perimeter},
                   {"C", geo.area / (6.0 * md * md * md)}};
  rep.value = stratum_sum_bound(geo.area, geo.perimeter, tprime,
                                static_cast<double>(tprime));
  return rep;
}

BoundReport census3_bound(const CmMode& mode, const Polarization& pol, Int t) {
  if (pol.g() != 3) throw DimensionMismatchError("census3_bound needs 3 multipliers");
  if (t < 0) throw PreconditionError("t must be nonnegative");
  BoundReport rep;
  rep.kind = "census3_bound";
  rep.t = t;

  if (std::holds_alternative<NoCm>(mode)) {
    const EllipsoidGeometry geo = ellipsoid_geometry(pol);
    rep.constants = {{"V", geo.volume}, {"S", geo.surface}, {"M", geo.mean_curvature}};
    rep.value = overhagen_bound(geo.volume, geo.surface, geo.mean_curvature,
                                static_cast<double>(t));
    return rep;
  }

  const CmParams& cm = std::get<CmParams>(mode);
  std::array<Int, 3> ms = {pol.multipliers[0], pol.multipliers[1], pol.multipliers[2]};
  std::sort(ms.begin(), ms.end());
  const Int tprime = t / ms[0];
  const Int r = (W(t / ms[1]) * (t / ms[2])).narrow();
  const EllipseGeometry geo = ellipse_geometry(cm);
  const double md = static_cast<double>(ms[0]);
  const double leading = geo.area * geo.area /
                         (3.0 * md * md * md * static_cast<double>(ms[1]) *
                          static_cast<double>(ms[2]));
  rep.constants = {{"A", geo.area}, {"L", geo.perimeter}, {"C", leading}};

  const double first =
      stratum_sum_bound(geo.area, geo.perimeter, tprime, 2.0 * static_cast<double>(tprime));
  const double rd = static_cast<double>(r);
  const double second = geo.area * rd + 0.5 * geo.perimeter * std::sqrt(rd) + 1.0;
  rep.value = 2.0 * first * second;
  return rep;
}

}  // namespace ecensus
