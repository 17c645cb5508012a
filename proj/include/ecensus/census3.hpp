#pragma once

#include <array>

#include "ecensus/census2.hpp"

namespace ecensus {

// Essential coordinates (alpha, beta, gamma, delta, epsilon, zeta, eta,
// theta, iota) of one elliptic curve of E^3. A valid class is primitive,
// has alpha, beta, gamma >= 0 and satisfies the three quadratic relations
//   alpha*beta  - delta*(delta + u*eta)     = v*w*eta^2
//   beta*gamma  - zeta*(zeta + u*iota)      = v*w*iota^2
//   alpha*gamma - epsilon*(epsilon+u*theta) = v*w*theta^2
// together with the cubic compatibility relation
//   2*alpha*beta*gamma = delta*(epsilon + u*theta)*zeta
//     + (delta + u*eta)*epsilon*(zeta + u*iota)
//     + v*w*((2*delta + u*eta)*theta*iota - (2*epsilon + u*theta)*eta*iota
//            + (2*zeta + u*iota)*eta*theta).
struct ThreefoldClass {
  Int alpha = 0;
  Int beta = 0;
  Int gamma = 0;
  Int delta = 0;
  Int epsilon = 0;
  Int zeta = 0;
  Int eta = 0;
  Int theta = 0;
  Int iota = 0;

  std::array<Int, 9> coords() const {
    return {alpha, beta, gamma, delta, epsilon, zeta, eta, theta, iota};
  }
  ClassTuple tuple() const {
    return {alpha, beta, gamma, delta, epsilon, zeta, eta, theta, iota};
  }

  friend auto operator<=>(const ThreefoldClass&, const ThreefoldClass&) = default;
};

struct ThreefoldRecord {
  ThreefoldClass cls;
  Int degree = 0;
  CurveKind kind = CurveKind::Ordinary;
  std::optional<LatticeBasis> basis;
};

bool check_class3(const CmParams& cm, const std::array<Int, 9>& s);

ThreefoldClass class_from_lambda3(const CmParams& cm, const LatticeVector& lambda);

// m*alpha + n*beta + p*gamma.
Int degree3(const Polarization& pol, const ThreefoldClass& s);

CurveKind classify3(const ThreefoldClass& s);

// All elliptic curves of E^3 with degree <= t, sorted by (degree, tuple);
// identical output for every thread count. NoCm mode: ordinary curves only.
std::vector<ThreefoldRecord> enumerate3(const CmMode& mode, const Polarization& pol,
                                        Int t, int threads = 1,
                                        bool with_basis = false);

// Positively oriented basis of the curve's rank-2 sublattice. Classes with
// alpha*beta*gamma != 0 use the 6x6 linear system; degenerate classes use
// the reduction to the surviving coordinate pair.
LatticeBasis reconstruct3(const CmParams& cm, const ThreefoldClass& s);

// (determinant of the 6x6 system, alpha*beta*gamma times the cubic defect);
// requires the three quadratic relations, PreconditionError otherwise.
std::pair<Int, Int> det_identity3(const CmParams& cm, const std::array<Int, 9>& s);

// The 6x6 coefficient matrix acting on the flat coordinates (a,b,c,d,e,f).
IntMat linear_system3(const CmParams& cm, const std::array<Int, 9>& s);

// Full 15-coordinate bivector rebuilt from the 9 essential coordinates.
Bivector class_bivector3(const CmParams& cm, const ThreefoldClass& s);

}  // namespace ecensus
