#include "ecensus/intmat.hpp"

#include <utility>

namespace ecensus {

namespace {

// Exact fraction over 128-bit integers, normalized on construction.
struct Q {
  __int128 num = 0;
  __int128 den = 1;

  static Q make(__int128 n, __int128 d) {
    if (d == 0) throw Error("internal: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    return Q{n, d};
  }

  bool zero() const { return num == 0; }

  friend Q operator+(const Q& a, const Q& b) {
    W n = W::wrap(a.num) * W::wrap(b.den) + W::wrap(b.num) * W::wrap(a.den);
    W d = W::wrap(a.den) * W::wrap(b.den);
    return make(n.value(), d.value());
  }
  friend Q operator-(const Q& a, const Q& b) {
    W n = W::wrap(a.num) * W::wrap(b.den) - W::wrap(b.num) * W::wrap(a.den);
    W d = W::wrap(a.den) * W::wrap(b.den);
    return make(n.value(), d.value());
  }
  friend Q operator*(const Q& a, const Q& b) {
    W n = W::wrap(a.num) * W::wrap(b.num);
    W d = W::wrap(a.den) * W::wrap(b.den);
    return make(n.value(), d.value());
  }
  Q inverse() const {
    if (num == 0) throw Error("internal: inverse of zero");
    return make(den, num);
  }
  Q operator-() const { return Q{-num, den}; }
};

}  // namespace

Int det(const IntMat& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw DimensionMismatchError("determinant of a non-square matrix");
  if (n == 0) return 1;

  std::vector<std::vector<W>> a(n, std::vector<W>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = W(m[i][j]);

  int sign = 1;
  W prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == W(0)) {
      std::size_t sel = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (a[i][k] != W(0)) {
          sel = i;
          break;
        }
      if (sel == n) return 0;
      std::swap(a[k], a[sel]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
    prev = a[k][k];
  }
  W d = a[n - 1][n - 1];
  return (sign < 0 ? -d : d).narrow();
}

std::vector<std::vector<Int>> kernel_basis(const IntMat& m) {
  const std::size_t rows = m.size();
  if (rows == 0) throw DimensionMismatchError("kernel of an empty matrix");
  const std::size_t cols = m[0].size();
  for (const auto& row : m)
    if (row.size() != cols) throw DimensionMismatchError("ragged matrix");

  std::vector<std::vector<Q>> r(rows, std::vector<Q>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) r[i][j] = Q::make(m[i][j], 1);

  // Reduced row echelon form with the first usable row as pivot.
  std::vector<int> pivot_row_of_col(cols, -1);
  std::size_t prow = 0;
  for (std::size_t c = 0; c < cols && prow < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = prow; i < rows; ++i)
      if (!r[i][c].zero()) {
        sel = i;
        break;
      }
    if (sel == rows) continue;
    std::swap(r[prow], r[sel]);
    Q inv = r[prow][c].inverse();
    for (std::size_t j = c; j < cols; ++j) r[prow][j] = r[prow][j] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == prow || r[i][c].zero()) continue;
      Q f = r[i][c];
      for (std::size_t j = c; j < cols; ++j) r[i][j] = r[i][j] - f * r[prow][j];
    }
    pivot_row_of_col[c] = static_cast<int>(prow);
    ++prow;
  }

  std::vector<std::vector<Int>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (pivot_row_of_col[f] >= 0) continue;
    std::vector<Q> x(cols, Q{});
    x[f] = Q::make(1, 1);
    for (std::size_t c = 0; c < cols; ++c)
      if (pivot_row_of_col[c] >= 0) x[c] = -r[pivot_row_of_col[c]][f];

    __int128 denlcm = 1;
    for (const Q& q : x) denlcm = lcm128(denlcm, q.den);
    std::vector<Int> v(cols);
    for (std::size_t j = 0; j < cols; ++j)
      v[j] = (W::wrap(x[j].num) * W::wrap(denlcm / x[j].den)).narrow();

    Int g = gcd_span(v);
    if (g > 1)
      for (Int& e : v) e /= g;
    for (Int e : v) {
      if (e == 0) continue;
      if (e < 0)
        for (Int& y : v) y = -y;
      break;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace ecensus
