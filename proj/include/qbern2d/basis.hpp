#pragma once

// Classical and modified q-Bernstein polynomials of two variables, and the
// identities they satisfy.

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "qbern2d/check.hpp"
#include "qbern2d/combinatorics.hpp"
#include "qbern2d/error.hpp"
#include "qbern2d/scalar.hpp"

namespace qbern2d {

/// (k, j; n, m): x-index, y-index, x-degree, y-degree. Indices above the
/// degree are allowed and select the zero polynomial.
struct BasisIndex {
  int k = 0;
  int j = 0;
  int n = 0;
  int m = 0;

  constexpr BasisIndex() = default;
  constexpr BasisIndex(int k_, int j_, int n_, int m_) : k(k_), j(j_), n(n_), m(m_) {
    if (k < 0 || j < 0 || n < 0 || m < 0) throw DomainError("BasisIndex entries must be nonnegative");
  }

  constexpr bool in_range() const noexcept { return k <= n && j <= m; }
  friend constexpr bool operator==(const BasisIndex&, const BasisIndex&) = default;
};

/// Number of basis polynomials of bidegree (n, m): nm + n + m + 1.
constexpr std::size_t basis_size(std::size_t n, std::size_t m) noexcept { return (n + 1) * (m + 1); }

template <Field T>
class EvalPoint2D {
 public:
  EvalPoint2D(QPoint<T> px, QPoint<T> py) : px_(std::move(px)), py_(std::move(py)) {
    if (px_.q() != py_.q()) throw DomainError("EvalPoint2D: coordinates built for different q");
  }

  const QPoint<T>& px() const noexcept { return px_; }
  const QPoint<T>& py() const noexcept { return py_; }

  EvalPoint2D reflected() const { return EvalPoint2D(px_.reflected(), py_.reflected()); }

 private:
  QPoint<T> px_;
  QPoint<T> py_;
};

// ---------------------------------------------------------------------------
// Classical basis

template <Field T>
T bernstein1_classical(int k, int n, const T& x) {
  if (k < 0 || n < 0 || k > n) return T(0);
  return binomial<T>(n, k) * ipow(x, k) * ipow(T(T(1) - x), n - k);
}

/// C(n,k) C(m,j) x^k y^j (1-x)^(n-k) (1-y)^(m-j).
template <Field T>
T bernstein2_classical(const BasisIndex& idx, const T& x, const T& y) {
  if (!(x >= T(0) && x <= T(1)) || !(y >= T(0) && y <= T(1))) {
    throw DomainError("bernstein2_classical: coordinates must lie in [0,1]");
  }
  return bernstein1_classical(idx.k, idx.n, x) * bernstein1_classical(idx.j, idx.m, y);
}

// ---------------------------------------------------------------------------
// Modified q-Bernstein basis

namespace detail {

// C(n,k) a^k b^(n-k) with the zero branch for out-of-range indices.
template <Field T>
T bernstein_from_brackets(int k, int n, const T& a, const T& b) {
  if (k < 0 || n < 0 || k > n) return T(0);
  return binomial<T>(n, k) * ipow(a, k) * ipow(b, n - k);
}

// q-integer pair ([x]_q, [1-x]_q).
template <Field T>
struct Brackets {
  T x;
  T one_minus_x;
};

template <Field T>
Brackets<T> brackets(const QPoint<T>& p, const QContext<T>& ctx) {
  return {q_integer(p, ctx), q_integer_complement(p, ctx)};
}

}  // namespace detail

/// Univariate factor C(n,k) [x]^k [1-x]^(n-k).
template <Field T>
T qbernstein1(int k, int n, const QPoint<T>& p, const QContext<T>& ctx) {
  auto b = detail::brackets(p, ctx);
  return detail::bernstein_from_brackets(k, n, b.x, b.one_minus_x);
}

/// B_{k,j;n,m}(x,y;q) in product form.
template <Field T>
T qbernstein2(const BasisIndex& idx, const EvalPoint2D<T>& pt, const QContext<T>& ctx) {
  if (!idx.in_range()) return T(0);
  return qbernstein1(idx.k, idx.n, pt.px(), ctx) * qbernstein1(idx.j, idx.m, pt.py(), ctx);
}

/// Values of every B_{k,j;n,m} for fixed (n,m), row-major in k.
template <Field T>
class BasisGrid {
 public:
  BasisGrid(int n, int m) : n_(n), m_(m), values_(basis_size(n, m), T(0)) {}

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }

  /// Zero outside 0 <= k <= n, 0 <= j <= m.
  T at(int k, int j) const {
    if (k < 0 || j < 0 || k > n_ || j > m_) return T(0);
    return values_[static_cast<std::size_t>(k) * (m_ + 1) + j];
  }
  T& ref(int k, int j) { return values_[static_cast<std::size_t>(k) * (m_ + 1) + j]; }

 private:
  int n_;
  int m_;
  std::vector<T> values_;
};

/// All B_{k,j;n,m} from the four-term recurrence, never touching the closed
/// form. Diagonal steps lower n and m together; when n != m the descent stops
/// at bidegree (n-m, 0) or (0, m-n), which is seeded from the univariate
/// recurrence B_{k,d} = [1-x] B_{k,d-1} + [x] B_{k-1,d-1} with B_{0,0} = 1.
template <Field T>
BasisGrid<T> recurrence_table(int n, int m, const EvalPoint2D<T>& pt, const QContext<T>& ctx) {
  if (n < 0 || m < 0) throw DomainError("recurrence_table: negative degree");
  const auto bx = detail::brackets(pt.px(), ctx);
  const auto by = detail::brackets(pt.py(), ctx);

  auto univariate = [](int degree, const detail::Brackets<T>& b) {
    std::vector<T> row{T(1)};
    for (int d = 1; d <= degree; ++d) {
      std::vector<T> next(static_cast<std::size_t>(d) + 1, T(0));
      for (int k = 0; k <= d; ++k) {
        if (k < d) next[k] += b.one_minus_x * row[k];
        if (k > 0) next[k] += b.x * row[k - 1];
      }
      row = std::move(next);
    }
    return row;
  };

  const int steps = std::min(n, m);
  const int n0 = n - steps;
  const int m0 = m - steps;
  const auto ux = univariate(n0, bx);
  const auto uy = univariate(m0, by);

  BasisGrid<T> grid(n0, m0);
  for (int k = 0; k <= n0; ++k) {
    for (int j = 0; j <= m0; ++j) grid.ref(k, j) = ux[k] * uy[j];
  }

  const T w00 = bx.one_minus_x * by.one_minus_x;
  const T w01 = bx.one_minus_x * by.x;
  const T w10 = bx.x * by.one_minus_x;
  const T w11 = bx.x * by.x;
  for (int s = 1; s <= steps; ++s) {
    BasisGrid<T> next(n0 + s, m0 + s);
    for (int k = 0; k <= n0 + s; ++k) {
      for (int j = 0; j <= m0 + s; ++j) {
        next.ref(k, j) = w00 * grid.at(k, j) + w01 * grid.at(k, j - 1) + w10 * grid.at(k - 1, j) +
                         w11 * grid.at(k - 1, j - 1);
      }
    }
    grid = std::move(next);
  }
  return grid;
}

/// B_{k,j;n,m} evaluated through the recurrence.
template <Field T>
T recurrence_eval(const BasisIndex& idx, const EvalPoint2D<T>& pt, const QContext<T>& ctx) {
  if (!idx.in_range()) return T(0);
  return recurrence_table(idx.n, idx.m, pt, ctx).at(idx.k, idx.j);
}

/// (B_{n-k,m-j;n,m}(1-x,1-y;q), B_{k,j;n,m}(x,y;q)).
template <Field T>
std::pair<T, T> symmetry_pair(const BasisIndex& idx, const EvalPoint2D<T>& pt, const QContext<T>& ctx) {
  const auto reflected = pt.reflected();
  T mirrored(0);
  if (idx.in_range()) mirrored = qbernstein2(BasisIndex(idx.n - idx.k, idx.m - idx.j, idx.n, idx.m), reflected, ctx);
  return {mirrored, qbernstein2(idx, pt, ctx)};
}

/// Mixed partial d^2 B_{k,j;n,m} / dx dy (floating contexts only: needs ln q).
template <Field T>
T derivative_xy(const BasisIndex& idx, const EvalPoint2D<T>& pt, const QContext<T>& ctx) {
  static_assert(!is_exact_v<T>, "derivative_xy needs ln q and is unavailable in exact mode");
  require_same_q(pt.px(), ctx);
  if (idx.n == 0 || idx.m == 0) return T(0);
  const auto bx = detail::brackets(pt.px(), ctx);
  const auto by = detail::brackets(pt.py(), ctx);
  const int k = idx.k, j = idx.j, n1 = idx.n - 1, m1 = idx.m - 1;
  auto lower = [&](int kk, int jj) {
    return detail::bernstein_from_brackets(kk, n1, bx.x, bx.one_minus_x) *
           detail::bernstein_from_brackets(jj, m1, by.x, by.one_minus_x);
  };
  const T& qx = pt.px().qx();
  const T& q1mx = pt.px().q1mx();
  const T& qy = pt.py().qx();
  const T& q1my = pt.py().q1mx();
  const T sum = qx * qy * lower(k - 1, j - 1) - qx * q1my * lower(k - 1, j) - q1mx * qy * lower(k, j - 1) +
                q1mx * q1my * lower(k, j);
  const T scale = ctx.ln_q() / (ctx.q() - T(1));
  return T(idx.n) * T(idx.m) * sum * scale * scale;
}

// ---------------------------------------------------------------------------
// Identities

/// (1+(1-q)[x][1-x])(1+(1-q)[y][1-y]) B_{k,j;n,m} against its expansion in
/// the bidegree (n+1, m+1) basis.
template <Field T>
IdentityCheck<T> degree_elevation_check(const BasisIndex& idx, const EvalPoint2D<T>& pt, const QContext<T>& ctx) {
  const auto bx = detail::brackets(pt.px(), ctx);
  const auto by = detail::brackets(pt.py(), ctx);
  const T fx = T(1) + ctx.one_minus_q() * bx.x * bx.one_minus_x;
  const T fy = T(1) + ctx.one_minus_q() * by.x * by.one_minus_x;
  T lhs = fx * fy * qbernstein2(idx, pt, ctx);

  const int k = idx.k, j = idx.j, n = idx.n, m = idx.m;
  const T n1(n + 1), m1(m + 1);
  const T ax = T(n - k + 1) / n1, bxw = T(k + 1) / n1;
  const T ay = T(m - j + 1) / m1, byw = T(j + 1) / m1;
  auto up = [&](int kk, int jj) { return qbernstein2(BasisIndex(kk, jj, n + 1, m + 1), pt, ctx); };
  T rhs = ax * ay * up(k, j) + ax * byw * up(k, j + 1) + bxw * ay * up(k + 1, j) + bxw * byw * up(k + 1, j + 1);
  return make_check(std::move(lhs), std::move(rhs));
}

/// B_{k,j;n,m} against ((n-k+1)/k)((m-j+1)/j)([x][y]/([1-x][1-y])) B_{k-1,j-1;n,m}.
/// Needs k, j >= 1; x = 1 or y = 1 raises DivisionByZero.
template <Field T>
IdentityCheck<T> ratio_identity_check(const BasisIndex& idx, const EvalPoint2D<T>& pt, const QContext<T>& ctx) {
  if (idx.k < 1 || idx.j < 1) throw DomainError("ratio_identity_check needs k >= 1 and j >= 1");
  const auto bx = detail::brackets(pt.px(), ctx);
  const auto by = detail::brackets(pt.py(), ctx);
  const T ratio = checked_div(T(bx.x * by.x), T(bx.one_minus_x * by.one_minus_x), "ratio_identity_check ([1-x][1-y])");
  T lhs = qbernstein2(idx, pt, ctx);
  T rhs = T(idx.n - idx.k + 1) / T(idx.k) * T(idx.m - idx.j + 1) / T(idx.j) * ratio *
          qbernstein2(BasisIndex(idx.k - 1, idx.j - 1, idx.n, idx.m), pt, ctx);
  return make_check(std::move(lhs), std::move(rhs));
}

/// One term c [x]^l [y]^r of the expansion of B_{k,j;n,m} in powers of the
/// q-integers. The coefficient is C(n,l)C(l,k)C(m,r)C(r,j)(-1)^(l-k+r-j) and
/// carries the factor q^(x_shift (1-x) + y_shift (1-y)).
struct PowerTerm {
  int l = 0;
  int r = 0;
  BigInt coefficient;
  int x_shift = 0;
  int y_shift = 0;
};

/// Terms ordered by (l, r). Empty for out-of-range indices.
inline std::vector<PowerTerm> power_expansion(const BasisIndex& idx) {
  std::vector<PowerTerm> terms;
  if (!idx.in_range()) return terms;
  for (int l = idx.k; l <= idx.n; ++l) {
    for (int r = idx.j; r <= idx.m; ++r) {
      BigInt c = binomial_int(idx.n, l) * binomial_int(l, idx.k) * binomial_int(idx.m, r) * binomial_int(r, idx.j);
      if ((l - idx.k + r - idx.j) % 2 != 0) c = -c;
      terms.push_back({l, r, std::move(c), l - idx.k, r - idx.j});
    }
  }
  return terms;
}

/// Sums the terms at a point, using q^(1-x) and q^(1-y) from the point.
template <Field T>
T evaluate_power_expansion(const std::vector<PowerTerm>& terms, const EvalPoint2D<T>& pt, const QContext<T>& ctx) {
  const T x = q_integer(pt.px(), ctx);
  const T y = q_integer(pt.py(), ctx);
  T acc(0);
  for (const auto& t : terms) {
    acc += from_bigint<T>(t.coefficient) * ipow(pt.px().q1mx(), t.x_shift) * ipow(pt.py().q1mx(), t.y_shift) *
           ipow(x, t.l) * ipow(y, t.r);
  }
  return acc;
}

template <Field T>
IdentityCheck<T> power_expansion_check(const BasisIndex& idx, const EvalPoint2D<T>& pt, const QContext<T>& ctx) {
  return make_check(qbernstein2(idx, pt, ctx), evaluate_power_expansion(power_expansion(idx), pt, ctx));
}

namespace detail {

// sum_{k>=l, j>=l} C(k,l)C(j,l)/(C(n,l)C(m,l)) B_{k,j;n,m}
template <Field T>
T weighted_basis_sum(int l, int n, int m, const EvalPoint2D<T>& pt, const QContext<T>& ctx) {
  const T norm = binomial<T>(n, l) * binomial<T>(m, l);
  T acc(0);
  for (int k = l; k <= n; ++k) {
    for (int j = l; j <= m; ++j) {
      acc += binomial<T>(k, l) * binomial<T>(j, l) * qbernstein2(BasisIndex(k, j, n, m), pt, ctx);
    }
  }
  return acc / norm;
}

template <Field T>
void require_weight_order(int l, int n, int m) {
  if (l < 0 || l > n || l > m) throw DomainError("weighted sum needs 0 <= l <= min(n, m)");
}

}  // namespace detail

/// ([x][y])^l against the normalized weighted sum of the bidegree (n,m) basis.
template <Field T>
IdentityCheck<T> weighted_sum_identity_check(int l, int n, int m, const EvalPoint2D<T>& pt, const QContext<T>& ctx) {
  detail::require_weight_order<T>(l, n, m);
  const auto bx = detail::brackets(pt.px(), ctx);
  const auto by = detail::brackets(pt.py(), ctx);
  T lhs = ipow(T(bx.x * by.x), l);
  const T denom = ipow(T(bx.one_minus_x + bx.x), n - l) * ipow(T(by.one_minus_x + by.x), m - l);
  T rhs = checked_div(detail::weighted_basis_sum(l, n, m, pt, ctx), denom, "weighted_sum_identity_check");
  return make_check(std::move(lhs), std::move(rhs));
}

/// The normalized weighted sum against
/// sum_{k,j<=l} q^(C(k,2)+C(j,2)) [x k]_q [y j]_q [k]_q! [j]_q! S(l,k;q) S(l,j;q).
template <Field T>
IdentityCheck<T> qstirling_weighted_sum_check(int l, int n, int m, const EvalPoint2D<T>& pt, const QContext<T>& ctx) {
  detail::require_weight_order<T>(l, n, m);
  const auto bx = detail::brackets(pt.px(), ctx);
  const auto by = detail::brackets(pt.py(), ctx);
  const T denom = ipow(T(bx.one_minus_x + bx.x), n - l) * ipow(T(by.one_minus_x + by.x), m - l);
  T lhs = checked_div(detail::weighted_basis_sum(l, n, m, pt, ctx), denom, "qstirling_weighted_sum_check");

  auto newton_terms = [&](const QPoint<T>& p) {
    std::vector<T> terms;
    for (int k = 0; k <= l; ++k) {
      terms.push_back(ctx.power(static_cast<long long>(k) * (k - 1) / 2) * gaussian_binomial(p, k, ctx) *
                      q_factorial<T>(k, ctx) * q_stirling2<T>(l, k, ctx));
    }
    return terms;
  };
  const auto tx = newton_terms(pt.px());
  const auto ty = newton_terms(pt.py());
  T rhs(0);
  for (const auto& a : tx) {
    for (const auto& b : ty) rhs += a * b;
  }
  return make_check(std::move(lhs), std::move(rhs));
}

}  // namespace qbern2d
