#pragma once

#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "ecensus/arith.hpp"

namespace ecensus {

// Parameters (u, v, w) of the CM equation w*tau^2 + u*tau + v = 0 for the
// lattice Z^g + tau*Z^g. tau is never materialized; every condition is
// rewritten through (u, v, w). Constructed via validate_cm.
struct CmParams {
  Int u = 0;
  Int v = 1;
  Int w = 1;
  Int disc = -4;  // u^2 - 4vw, always < 0

  friend bool operator==(const CmParams&, const CmParams&) = default;
};

// Marker for End(E) = Z: only ordinary curves exist.
struct NoCm {
  friend bool operator==(const NoCm&, const NoCm&) = default;
};

using CmMode = std::variant<CmParams, NoCm>;

// Element of Z^g + tau*Z^g stored as the two integer blocks (lambda_1 | lambda_2),
// i.e. component i of the vector is real_part[i] + tau * tau_part[i].
struct LatticeVector {
  std::vector<Int> real_part;
  std::vector<Int> tau_part;

  LatticeVector(std::vector<Int> re, std::vector<Int> im);

  int g() const { return static_cast<int>(real_part.size()); }
  bool is_zero() const;
  // Flattened (lambda_1 | lambda_2) as one 2g-vector.
  std::vector<Int> flat() const;
  static LatticeVector from_flat(std::span<const Int> coords);

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
};

// Product-polarization multipliers (m_1, ..., m_g), all >= 1.
struct Polarization {
  std::vector<Int> multipliers;

  explicit Polarization(std::vector<Int> m);
  int g() const { return static_cast<int>(multipliers.size()); }

  friend bool operator==(const Polarization&, const Polarization&) = default;
};

// Checks w > 0, gcd(u, v, w) = 1 and u^2 - 4vw < 0; throws InvalidCmError
// naming the violated invariant otherwise.
CmParams validate_cm(Int u, Int v, Int w);

// The integral endomorphism lambda -> w*tau*lambda of the lattice:
// blocks (-v*lambda_2 | w*lambda_1 - u*lambda_2).
LatticeVector bar(const CmParams& cm, const LatticeVector& lambda);

// w*x^2 - u*x*y + v*y^2, the diagonal entry of the lambda ^ bar(lambda)
// matrix. Positive definite since disc < 0 and w > 0.
Int q2(const CmParams& cm, Int x, Int y);

// x^2 + u*x*y + v*w*y^2, the form whose representations drive the census
// enumeration. Positive definite.
Int qform(const CmParams& cm, Int x, Int y);

// sum_i m_i * q2(lambda_1i, lambda_2i); vanishes only at lambda = 0.
Int degree_numerator(const CmParams& cm, const Polarization& pol,
                     const LatticeVector& lambda);

// Decides in exact arithmetic whether mu lies on the Q(tau)-line through
// lambda. If it does, returns the unique rationals (x, y) with
// mu = (x + tau*y) * lambda, i.e. mu = x*lambda + (y/w)*bar(lambda).
// In particular bar(lambda) itself maps to (0, w).
std::optional<std::pair<Rat, Rat>> rational_line_membership(
    const CmParams& cm, const LatticeVector& lambda, const LatticeVector& mu);

}  // namespace ecensus
