#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ecensus/cm.hpp"

namespace ecensus {

// Element of Lambda ^ Lambda in the fixed coordinate order: pairs (i, j)
// with i < j, lexicographic over the 2g flattened lattice coordinates.
// 6 coordinates for g = 2, 15 for g = 3.
struct Bivector {
  int g = 0;
  std::vector<Int> coords;

  friend bool operator==(const Bivector&, const Bivector&) = default;
};

// Position of the pair (i, j), i < j, in the fixed coordinate order.
int bivector_index(int g, int i, int j);

Bivector wedge(const LatticeVector& lambda, const LatticeVector& mu);

// gcd of the entries of a nonzero integer vector; ZeroVectorError on zero.
Int content(std::span<const Int> v);

// v != 0 and content(v) = 1; the zero vector is not primitive.
bool is_primitive(std::span<const Int> v);

// Content of the class of mu in Lambda / Z*lambda, computed by an
// elementary-divisor column reduction that brings lambda to a unit vector
// (independent of the wedge route, so the two can be compared).
// Equals content(wedge(lambda, mu)).
Int quotient_content(const LatticeVector& lambda, const LatticeVector& mu);

// True iff (lambda, mu) is a basis of the period lattice of an elliptic
// curve of the torus: the pair spans one Q(tau)-line and the wedge is
// primitive.
bool is_elliptic_basis(const CmParams& cm, const LatticeVector& lambda,
                       const LatticeVector& mu);

// One integer solution mu of wedge(lambda, mu) = omega, normalized so that
// 0 <= mu[i0] < |lambda[i0]| at lambda's first nonzero coordinate (the
// solution set is mu + Z*lambda). Absent when no integer solution exists.
std::optional<std::vector<Int>> solve_wedge(std::span<const Int> lambda_flat,
                                            std::span<const Int> omega);

}  // namespace ecensus
