#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "ecensus/exterior.hpp"
#include "ecensus/intmat.hpp"

namespace ecensus {

enum class CurveKind { Ordinary, ExtraOrdinary };

// "ordinary" / "extra-ordinary"
const char* kind_name(CurveKind kind);

// Generic class-coordinate tuple (4 entries for g = 2, 9 for g = 3).
using ClassTuple = std::vector<Int>;

// Essential coordinates (alpha, beta, gamma, eta) of one elliptic curve of
// E^2. A valid class is primitive, has alpha, beta >= 0 and satisfies
//   alpha*beta - gamma*(gamma + u*eta) = v*w*eta^2.
struct SurfaceClass {
  Int alpha = 0;
  Int beta = 0;
  Int gamma = 0;
  Int eta = 0;

  std::array<Int, 4> coords() const { return {alpha, beta, gamma, eta}; }
  ClassTuple tuple() const { return {alpha, beta, gamma, eta}; }

  friend auto operator<=>(const SurfaceClass&, const SurfaceClass&) = default;
};

using LatticeBasis = std::pair<LatticeVector, LatticeVector>;

struct SurfaceRecord {
  SurfaceClass cls;
  Int degree = 0;
  CurveKind kind = CurveKind::Ordinary;
  std::optional<LatticeBasis> basis;
};

bool check_class2(const CmParams& cm, const std::array<Int, 4>& s);

// Normalized class of the curve through a primitive lambda (g = 2):
// essential coordinates of lambda ^ bar(lambda) divided by their gcd.
SurfaceClass class_from_lambda2(const CmParams& cm, const LatticeVector& lambda);

// m*alpha + n*beta.
Int degree2(const Polarization& pol, const SurfaceClass& s);

CurveKind classify2(const SurfaceClass& s);

// All elliptic curves of E^2 with degree <= t, one record per curve,
// sorted by (degree, class tuple). NoCm mode lists the ordinary curves.
// Output is identical for every thread count.
std::vector<SurfaceRecord> enumerate2(const CmMode& mode, const Polarization& pol,
                                      Int t, int threads = 1,
                                      bool with_basis = false);

// Positively oriented basis (lambda, mu) of the curve's rank-2 sublattice:
// lambda is the content-normalized first kernel vector of the 4x4 linear
// system, mu solves wedge(lambda, mu) = class bivector.
LatticeBasis reconstruct2(const CmParams& cm, const SurfaceClass& s);

// (determinant of the 4x4 system built from s, -(alpha*beta -
// gamma*(gamma + u*eta) - v*w*eta^2)^2); the two entries always agree.
std::pair<Int, Int> det_identity2(const CmParams& cm, const std::array<Int, 4>& s);

// All (x, y) with x^2 + u*x*y + v*w*y^2 = n, in deterministic order
// (y ascending, then x). Exact: integer square roots only.
std::vector<std::pair<Int, Int>> represent_qform(const CmParams& cm, Int n);

// The 4x4 coefficient matrix of the linear system attached to a 4-tuple
// (rows act on the flat coordinates (a, b, c, d)).
IntMat linear_system2(const CmParams& cm, const std::array<Int, 4>& s);

// Full 6-coordinate bivector determined by the essential coordinates:
// (-v*eta, alpha, gamma, gamma + u*eta, beta, -w*eta).
Bivector class_bivector2(const CmParams& cm, const SurfaceClass& s);

}  // namespace ecensus
