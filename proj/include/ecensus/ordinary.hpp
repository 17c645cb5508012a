#pragma once

#include <span>
#include <utility>

#include "ecensus/census2.hpp"

namespace ecensus {

// Primitive g-vector with first nonzero entry positive; parameter of the
// embedding x -> (v_1 x, ..., v_g x) of E into E^g.
struct OrdinaryCurve {
  std::vector<Int> v;

  friend bool operator==(const OrdinaryCurve&, const OrdinaryCurve&) = default;
};

// All sign-normalized primitive v with sum m_i v_i^2 <= t, each once,
// sorted by (degree, v).
std::vector<OrdinaryCurve> enumerate_ordinary(int g, const Polarization& pol, Int t);

// Class tuple of E_v (4 or 9 coordinates): the eta-block vanishes, the
// entries are the pair products v_i v_j, and the value is independent of
// the CM parameters.
ClassTuple ordinary_class(const CmParams& cm, const OrdinaryCurve& curve);

// Degree report for the map E -> E^g built from endomorphisms
// phi_i = x_i + y_i * (w tau). class_degree is the degree of the image
// curve (the saturation); endo_degree is sum m_i * deg(phi_i) with
// deg(x + y*w*tau) = x^2 - u*x*y + v*w*y^2. They differ exactly when phi
// is not an embedding onto its image.
struct EndomorphismReport {
  ClassTuple class_coords;
  Int class_degree = 0;
  Int endo_degree = 0;
  bool degrees_match = false;
  CurveKind kind = CurveKind::Ordinary;
};

EndomorphismReport class_from_endomorphism_vector(
    const CmParams& cm, const Polarization& pol,
    std::span<const std::pair<Int, Int>> phi);

}  // namespace ecensus
