#include "ecensus/exterior.hpp"

#include <algorithm>

namespace ecensus {

int bivector_index(int g, int i, int j) {
  const int n = 2 * g;
  // offset of row i in the upper-triangular enumeration, then column j
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

Bivector wedge(const LatticeVector& lambda, const LatticeVector& mu) {
  if (lambda.g() != mu.g())
    throw DimensionMismatchError("wedge of vectors with different dimension");
  const std::vector<Int> x = lambda.flat();
  const std::vector<Int> y = mu.flat();
  const int n = static_cast<int>(x.size());
  Bivector out{lambda.g(), {}};
  out.coords.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      out.coords.push_back((W(x[i]) * y[j] - W(x[j]) * y[i]).narrow());
  return out;
}

Int content(std::span<const Int> v) {
  Int g = gcd_span(v);
  if (g == 0) throw ZeroVectorError("content of the zero vector");
  return g;
}

bool is_primitive(std::span<const Int> v) { return gcd_span(v) == 1; }

Int quotient_content(const LatticeVector& lambda, const LatticeVector& mu) {
  if (lambda.g() != mu.g())
    throw DimensionMismatchError("vectors of different dimension");
  std::vector<Int> a = lambda.flat();
  std::vector<Int> b = mu.flat();
  if (!is_primitive(a)) throw NotPrimitiveError("lambda must be primitive");

  // Column operations turning lambda into (+-1, 0, ..., 0); the mirrored
  // operations on mu give coordinates of [mu] in Lambda / Z*lambda.
  const std::size_t n = a.size();
  for (std::size_t i = 1; i < n; ++i) {
    if (a[i] == 0) continue;
    ExtGcd e = extended_gcd(a[0], a[i]);
    const Int p = a[0] / e.g;
    const Int q = a[i] / e.g;
    const Int b0 = b[0], bi = b[i];
    b[0] = (W(e.s) * b0 + W(e.t) * bi).narrow();
    b[i] = (W(p) * bi - W(q) * b0).narrow();
    a[0] = e.g;
    a[i] = 0;
  }
  Int g = gcd_span(std::span<const Int>(b).subspan(1));
  if (g == 0) throw DependentVectorsError("mu is an integer multiple of lambda");
  return g;
}

bool is_elliptic_basis(const CmParams& cm, const LatticeVector& lambda,
                       const LatticeVector& mu) {
  if (lambda.is_zero() || mu.is_zero()) return false;
  if (!rational_line_membership(cm, lambda, mu).has_value()) return false;
  return is_primitive(wedge(lambda, mu).coords);
}

std::optional<std::vector<Int>> solve_wedge(std::span<const Int> lambda_flat,
                                            std::span<const Int> omega) {
  const int n = static_cast<int>(lambda_flat.size());
  const int g = n / 2;
  if (n < 2 || n % 2 != 0 ||
      omega.size() != static_cast<std::size_t>(n) * (n - 1) / 2)
    throw DimensionMismatchError("wedge system of inconsistent sizes");

  int i0 = -1;
  for (int i = 0; i < n; ++i)
    if (lambda_flat[i] != 0) {
      i0 = i;
      break;
    }
  if (i0 < 0) throw ZeroVectorError("wedge with the zero vector");
  const Int piv = lambda_flat[i0];
  const Int bound = piv < 0 ? -piv : piv;

  // Solutions form mu + Z*lambda; scanning the residue of mu[i0] modulo the
  // pivot finds the canonical representative directly.
  for (Int s = 0; s < bound; ++s) {
    std::vector<Int> mu(n, 0);
    mu[i0] = s;
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) {
      if (j == i0) continue;
      W rhs = 0;
      if (j > i0)
        rhs = W(omega[bivector_index(g, i0, j)]) + W(lambda_flat[j]) * s;
      else
        rhs = W(lambda_flat[j]) * s - W(omega[bivector_index(g, j, i0)]);
      if (rhs.value() % piv != 0) {
        ok = false;
        break;
      }
      mu[j] = W::wrap(rhs.value() / piv).narrow();
    }
    if (!ok) continue;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j) {
        W lhs = W(lambda_flat[i]) * mu[j] - W(lambda_flat[j]) * mu[i];
        if (lhs != W(omega[bivector_index(g, i, j)])) ok = false;
      }
    if (ok) return mu;
  }
  return std::nullopt;
}

}  // namespace ecensus
