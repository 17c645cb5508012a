#pragma once

#include <random>
#include <vector>

#include "ecensus/cm.hpp"
#include "ecensus/exterior.hpp"

namespace testutil {

using ecensus::CmParams;
using ecensus::Int;
using ecensus::LatticeVector;
using ecensus::W;

// Random valid CM triple with |u| <= 3, 1 <= v, w <= 5, disc < 0.
inline CmParams random_cm(std::mt19937_64& rng) {
  for (;;) {
    Int u = static_cast<Int>(rng() % 7) - 3;
    Int v = static_cast<Int>(rng() % 5) + 1;
    Int w = static_cast<Int>(rng() % 5) + 1;
    if (ecensus::gcd_i(ecensus::gcd_i(u, v), w) != 1) continue;
    if (u * u - 4 * v * w >= 0) continue;
    return ecensus::validate_cm(u, v, w);
  }
}

inline std::vector<Int> random_flat(std::mt19937_64& rng, int g, Int radius) {
  std::vector<Int> flat(2 * g);
  for (Int& x : flat)
    x = static_cast<Int>(rng() % (2 * radius + 1)) - radius;
  return flat;
}

inline LatticeVector random_vector(std::mt19937_64& rng, int g, Int radius) {
  for (;;) {
    auto flat = random_flat(rng, g, radius);
    if (ecensus::gcd_span(flat) == 0) continue;
    return LatticeVector::from_flat(flat);
  }
}

inline LatticeVector random_primitive(std::mt19937_64& rng, int g, Int radius) {
  for (;;) {
    auto flat = random_flat(rng, g, radius);
    Int c = ecensus::gcd_span(flat);
    if (c == 0) continue;
    for (Int& x : flat) x /= c;
    return LatticeVector::from_flat(flat);
  }
}

// Number of lattice points with q(x, y) = x^2 + u*x*y + v*w*y^2 <= t.
inline Int count_qform_points(const CmParams& cm, Int t) {
  if (t < 0) return 0;
  Int count = 0;
  const Int d = -cm.disc;
  const Int ymax = ecensus::isqrt(4 * t / d);
  for (Int y = -ymax; y <= ymax; ++y)
    for (Int x = -(ecensus::isqrt(t) + std::abs(cm.u) * std::abs(y) + 1);
         x <= ecensus::isqrt(t) + std::abs(cm.u) * std::abs(y) + 1; ++x)
      if ((W(x) * x + W(cm.u) * x * y + W(cm.v) * cm.w * y * y) <= W(t)) ++count;
  return count;
}

// Number of lattice points with m*x^2 + n*y^2 + p*z^2 <= t.
inline Int count_ellipsoid_points(Int m, Int n, Int p, Int t) {
  if (t < 0) return 0;
  Int count = 0;
  const Int xb = ecensus::isqrt(t / m), yb = ecensus::isqrt(t / n),
            zb = ecensus::isqrt(t / p);
  for (Int x = -xb; x <= xb; ++x)
    for (Int y = -yb; y <= yb; ++y)
      for (Int z = -zb; z <= zb; ++z)
        if (W(m) * x * x + W(n) * y * y + W(p) * z * z <= W(t)) ++count;
  return count;
}

}  // namespace testutil
