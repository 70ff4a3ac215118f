#pragma once

// Bivariate Bernstein operators (classical and modified q) and their grid
// evaluation.

#include <cstddef>
#include <functional>
#include <optional>
#include <type_traits>
#include <sstream>
#include <string>
#include <vector>

#include "qbern2d/basis.hpp"
#include "qbern2d/error.hpp"
#include "qbern2d/scalar.hpp"

namespace qbern2d {

/// A pure function on [0,1]^2. It is sampled at the lattice nodes (k/n, j/m).
template <Field T>
using OperandFunction = std::function<T(const T& u, const T& v)>;

namespace detail {

template <Field T>
void require_positive_orders(int n, int m) {
  if (n < 1 || m < 1) throw DomainError("Bernstein operator needs n, m >= 1");
}

}  // namespace detail

/// sum_{k,j} f(k/n, j/m) B_{k,j;n,m}(x,y).
template <Field T>
T bernstein_operator_classical(const OperandFunction<T>& f, int n, int m, const T& x, const T& y) {
  detail::require_positive_orders<T>(n, m);
  T acc(0);
  for (int k = 0; k <= n; ++k) {
    for (int j = 0; j <= m; ++j) {
      acc += f(T(k) / T(n), T(j) / T(m)) * bernstein2_classical(BasisIndex(k, j, n, m), x, y);
    }
  }
  return acc;
}

/// sum_{k,j} f(k/n, j/m) B_{k,j;n,m}(x,y;q). The sample nodes are not deformed.
template <Field T>
T qbernstein_operator(const OperandFunction<T>& f, int n, int m, const EvalPoint2D<T>& pt, const QContext<T>& ctx) {
  detail::require_positive_orders<T>(n, m);
  T acc(0);
  for (int k = 0; k <= n; ++k) {
    for (int j = 0; j <= m; ++j) {
      acc += f(T(k) / T(n), T(j) / T(m)) * qbernstein2(BasisIndex(k, j, n, m), pt, ctx);
    }
  }
  return acc;
}

/// (1 + (1-q)[x][1-x])^n (1 + (1-q)[y][1-y])^m, the operator applied to f = 1.
template <Field T>
T qoperator_unit_closed_form(int n, int m, const EvalPoint2D<T>& pt, const QContext<T>& ctx) {
  const T fx = T(1) + ctx.one_minus_q() * q_integer(pt.px(), ctx) * q_integer_complement(pt.px(), ctx);
  const T fy = T(1) + ctx.one_minus_q() * q_integer(pt.py(), ctx) * q_integer_complement(pt.py(), ctx);
  return ipow(fx, n) * ipow(fy, m);
}

/// [x][y](1 + (1-q)[x][1-x])^(n-1) (1 + (1-q)[y][1-y])^(m-1), the operator
/// applied to f(u,v) = uv.
template <Field T>
T qoperator_uv_closed_form(int n, int m, const EvalPoint2D<T>& pt, const QContext<T>& ctx) {
  detail::require_positive_orders<T>(n, m);
  const T x = q_integer(pt.px(), ctx);
  const T y = q_integer(pt.py(), ctx);
  const T fx = T(1) + ctx.one_minus_q() * x * q_integer_complement(pt.px(), ctx);
  const T fy = T(1) + ctx.one_minus_q() * y * q_integer_complement(pt.py(), ctx);
  return x * y * ipow(fx, n - 1) * ipow(fy, m - 1);
}

// ---------------------------------------------------------------------------
// Grids

struct GridSpec {
  int nx = 2;
  int ny = 2;

  void validate() const {
    if (nx < 2 || ny < 2) throw DomainError("GridSpec: nx and ny must be at least 2");
  }
};

template <Field T>
struct GridRow {
  int ix = 0;
  int iy = 0;
  T x;
  T y;
  T value;
};

namespace detail {

template <Field T>
T grid_coordinate(int i, int count) {
  return T(i) / T(count - 1);
}

template <Field T>
QPoint<T> grid_qpoint(const T& coordinate, const QContext<T>& ctx) {
  if constexpr (is_exact_v<T>) {
    // Exact points need a rational q^x, which a lattice node only has at the ends.
    if (coordinate == T(0)) return make_qpoint_exact(T(1), ctx);
    if (coordinate == T(1)) return make_qpoint_exact(ctx.q(), ctx);
    throw DomainError("q^x is irrational at interior lattice nodes; use float mode");
  } else {
    return make_qpoint(coordinate, ctx);
  }
}

}  // namespace detail

/// Evaluates the operator (classical, or the q-operator when a context is
/// given) at every lattice node, rows ordered by (ix, iy).
template <Field T>
std::vector<GridRow<T>> operator_grid_table(const OperandFunction<T>& f, int n, int m, const GridSpec& grid,
                                            const std::optional<QContext<std::type_identity_t<T>>>& ctx = std::nullopt) {
  grid.validate();
  std::vector<GridRow<T>> rows;
  rows.reserve(static_cast<std::size_t>(grid.nx) * grid.ny);
  for (int ix = 0; ix < grid.nx; ++ix) {
    for (int iy = 0; iy < grid.ny; ++iy) {
      const T x = detail::grid_coordinate<T>(ix, grid.nx);
      const T y = detail::grid_coordinate<T>(iy, grid.ny);
      try {
        T value = ctx ? qbernstein_operator(f, n, m,
                                            EvalPoint2D<T>(detail::grid_qpoint(x, *ctx), detail::grid_qpoint(y, *ctx)),
                                            *ctx)
                      : bernstein_operator_classical(f, n, m, x, y);
        rows.push_back({ix, iy, x, y, std::move(value)});
      } catch (const Error& e) {
        std::ostringstream os;
        os << "at node (" << ix << ", " << iy << ") = (" << to_scalar(x) << ", " << to_scalar(y) << "): " << e.what();
        throw DomainError(os.str());
      }
    }
  }
  return rows;
}

}  // namespace qbern2d
