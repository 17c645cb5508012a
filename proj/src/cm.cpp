#include "ecensus/cm.hpp"

#include <algorithm>

namespace ecensus {

LatticeVector::LatticeVector(std::vector<Int> re, std::vector<Int> im)
    : real_part(std::move(re)), tau_part(std::move(im)) {
  if (real_part.empty() || real_part.size() != tau_part.size())
    throw DimensionMismatchError("lattice vector blocks must have equal nonzero length");
}

bool LatticeVector::is_zero() const {
  auto zero = [](Int x) { return x == 0; };
  return std::all_of(real_part.begin(), real_part.end(), zero) &&
         std::all_of(tau_part.begin(), tau_part.end(), zero);
}

std::vector<Int> LatticeVector::flat() const {
  std::vector<Int> out = real_part;
  out.insert(out.end(), tau_part.begin(), tau_part.end());
  return out;
}

LatticeVector LatticeVector::from_flat(std::span<const Int> coords) {
  if (coords.empty() || coords.size() % 2 != 0)
    throw DimensionMismatchError("flat lattice vector must have even length");
  std::size_t g = coords.size() / 2;
  return LatticeVector(std::vector<Int>(coords.begin(), coords.begin() + g),
                       std::vector<Int>(coords.begin() + g, coords.end()));
}

Polarization::Polarization(std::vector<Int> m) : multipliers(std::move(m)) {
  if (multipliers.empty())
    throw DimensionMismatchError("polarization needs at least one multiplier");
  for (Int mi : multipliers)
    if (mi < 1) throw PreconditionError("polarization multipliers must be >= 1");
}

CmParams validate_cm(Int u, Int v, Int w) {
  if (w <= 0)
    throw InvalidCmError(CmViolation::NonPositiveW,
                         "invalid CM parameters: w must be positive");
  if (gcd_i(gcd_i(u, v), w) != 1)
    throw InvalidCmError(CmViolation::NotCoprime,
                         "invalid CM parameters: u, v, w must be coprime");
  Int disc = (W(u) * u - W(4) * v * w).narrow();
  if (disc >= 0)
    throw InvalidCmError(
        CmViolation::NonNegativeDiscriminant,
        "invalid CM parameters: discriminant u^2 - 4vw must be negative");
  return CmParams{u, v, w, disc};
}

LatticeVector bar(const CmParams& cm, const LatticeVector& lambda) {
  const int g = lambda.g();
  std::vector<Int> re(g), im(g);
  for (int i = 0; i < g; ++i) {
    re[i] = (-W(cm.v) * lambda.tau_part[i]).narrow();
    im[i] = (W(cm.w) * lambda.real_part[i] - W(cm.u) * lambda.tau_part[i]).narrow();
  }
  return LatticeVector(std::move(re), std::move(im));
}

Int q2(const CmParams& cm, Int x, Int y) {
  return (W(cm.w) * x * x - W(cm.u) * x * y + W(cm.v) * y * y).narrow();
}

Int qform(const CmParams& cm, Int x, Int y) {
  return (W(x) * x + W(cm.u) * x * y + W(cm.v) * cm.w * y * y).narrow();
}

Int degree_numerator(const CmParams& cm, const Polarization& pol,
                     const LatticeVector& lambda) {
  if (pol.g() != lambda.g())
    throw DimensionMismatchError("polarization and lattice vector dimensions differ");
  W sum = 0;
  for (int i = 0; i < lambda.g(); ++i)
    sum += W(pol.multipliers[i]) * q2(cm, lambda.real_part[i], lambda.tau_part[i]);
  return sum.narrow();
}

std::optional<std::pair<Rat, Rat>> rational_line_membership(
    const CmParams& cm, const LatticeVector& lambda, const LatticeVector& mu) {
  if (lambda.g() != mu.g())
    throw DimensionMismatchError("lattice vectors of different dimension");
  if (lambda.is_zero()) throw ZeroVectorError("line through the zero vector");

  // mu = x*lambda + (y/w)*bar(lambda) componentwise; clearing w gives the
  // integral 2x2-solvable system [lambda | bar(lambda)] (X, y)^T = w*mu
  // with X = w*x. lambda and bar(lambda) are independent over Q (tau is not
  // rational), so some 2x2 minor is nonzero.
  const std::vector<Int> a = lambda.flat();
  const std::vector<Int> b = bar(cm, lambda).flat();
  const std::vector<Int> c = mu.flat();
  const std::size_t n = a.size();

  std::size_t pi = n, pj = n;
  W minor = 0;
  for (std::size_t i = 0; i < n && pi == n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      W m = W(a[i]) * b[j] - W(a[j]) * b[i];
      if (m != W(0)) {
        pi = i;
        pj = j;
        minor = m;
        break;
      }
    }
  if (pi == n) throw Error("internal: lambda and bar(lambda) dependent");

  const W wmu_i = W(cm.w) * c[pi];
  const W wmu_j = W(cm.w) * c[pj];
  const W xn = wmu_i * b[pj] - wmu_j * b[pi];  // X * minor
  const W yn = W(a[pi]) * wmu_j - W(a[pj]) * wmu_i;  // y * minor
  for (std::size_t k = 0; k < n; ++k) {
    if (xn * a[k] + yn * b[k] != minor * W(cm.w) * c[k]) return std::nullopt;
  }
  return std::make_pair(Rat::make(xn, minor * cm.w), Rat::make(yn, minor));
}

}  // namespace ecensus
