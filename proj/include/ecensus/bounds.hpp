#pragma once

#include <map>
#include <string>

#include "ecensus/cm.hpp"

namespace ecensus {

// Geometry of the planar region {x^2 + u*x*y + v*w*y^2 <= 1}. The area is
// the closed form pi / sqrt(vw - u^2/4); the perimeter is computed by
// quadrature to relative error <= 1e-9 and then inflated by (1 + 1e-6) so
// that every bound built from it stays a true upper bound.
struct EllipseGeometry {
  double area = 0;       // A
  double perimeter = 0;  // L, over-estimated
};

EllipseGeometry ellipse_geometry(const CmParams& cm);

// Geometry of {m*x^2 + n*y^2 + p*z^2 <= 1}: exact volume, quadrature
// surface area and total mean curvature, the latter two inflated as above.
struct EllipsoidGeometry {
  double volume = 0;          // V
  double surface = 0;         // S, over-estimated
  double mean_curvature = 0;  // M = integral of H over the surface, over-estimated
};

EllipsoidGeometry ellipsoid_geometry(const Polarization& pol);

// Planar lattice-point bound: N(t) <= A*t + (L/2)*sqrt(t) + 1 for the
// sqrt(t)-scaled convex region of area A and boundary length L.
double nosarzewska_bound(double area, double perimeter, double t);

// Spatial lattice-point bound: N(t) <= V*t^(3/2) + (S/2)*t + (M/pi)*sqrt(t) + 1.
double overhagen_bound(double volume, double surface, double mean_curvature,
                       double t);

// (pi/8)*t^2 - (t-2)/(6t), an upper bound for sum_{n=0}^{t} sqrt(n(t-n)).
double trapz_sqrt_bound(Int t);

struct BoundReport {
  std::string kind;
  std::map<std::string, double> constants;
  Int t = 0;
  double value = 0;
};

// Upper bound for the number of elliptic curves of E^2 with degree <= t:
// with t' = floor(t / min(m, n)),
//   A*(t'^3 - t')/6 + (L/2)*((pi/8)*t'^2 - (t'-2)/(6t')) + t',
// the 1/t' term taken as 0 at t' = 0. NoCm mode uses the planar bound for
// the ellipse m*a^2 + n*b^2 <= 1.
BoundReport census2_bound(const CmMode& mode, const Polarization& pol, Int t);

// Upper bound for E^3 with multipliers sorted m <= n <= p: twice the
// product of the first factor (as above with trailing term 2t') and
// A*r + (L/2)*sqrt(r) + 1 where r = floor(t/n)*floor(t/p). Reports the
// leading constant C = A^2 / (3 m^3 n p). NoCm mode uses the spatial
// bound for the ellipsoid.
BoundReport census3_bound(const CmMode& mode, const Polarization& pol, Int t);

// Perimeter of an axis-aligned ellipse with semi-axes a, b by quadrature
// (no inflation); exposed for cross-checking against closed forms.
double ellipse_perimeter(double a, double b);

}  // namespace ecensus
