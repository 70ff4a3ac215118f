#pragma once

// Generating functions of the q-Bernstein basis, the Bernoulli x Stirling
// decomposition, and the Cauchy-integral representation.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

#include "qbern2d/basis.hpp"
#include "qbern2d/check.hpp"
#include "qbern2d/combinatorics.hpp"
#include "qbern2d/egf.hpp"
#include "qbern2d/error.hpp"
#include "qbern2d/scalar.hpp"

namespace qbern2d {

/// EGF of (t[x])^k/k! e^{t[1-x]}. Coefficient n is B_{k,n}(x;q).
template <Field T>
TruncatedEGF<T> qbernstein_factor_egf(std::size_t k, const QPoint<T>& p, const QContext<T>& ctx, std::size_t order) {
  if (order < k) throw DomainError("qbernstein_factor_egf: order must be at least k");
  return TruncatedEGF<T>::monomial(k, order) * ipow(q_integer(p, ctx), static_cast<long long>(k)) *
         egf_exp(q_integer_complement(p, ctx), order);
}

/// EGF of (tx)^k/k! e^{t(1-x)}. Coefficient n is the classical B_{k,n}(x).
template <Field T>
TruncatedEGF<T> bernstein_factor_egf(std::size_t k, const T& x, std::size_t order) {
  if (order < k) throw DomainError("bernstein_factor_egf: order must be at least k");
  return TruncatedEGF<T>::monomial(k, order) * ipow(x, static_cast<long long>(k)) * egf_exp(T(T(1) - x), order);
}

/// EGF of (e^t - 1)^k / k!. Coefficient n is S(n,k).
template <Field T = Rational>
TruncatedEGF<T> stirling_egf(std::size_t k, std::size_t order) {
  auto e_minus_one = egf_exp(T(1), order) - TruncatedEGF<T>::constant(T(1), order);
  BigInt fact = 1;
  for (std::size_t i = 2; i <= k; ++i) fact *= i;
  return e_minus_one.pow(k) * checked_div(T(1), from_bigint<T>(fact));
}

/// B_{k,n}(x;q) against [x]^k sum_l C(n,l) B_l^(k)([1-x]) S(n-l,k).
template <Field T>
IdentityCheck<T> bernoulli_stirling_univariate_check(int k, int n, const QPoint<T>& p, const QContext<T>& ctx) {
  if (k < 0 || n < 0) throw DomainError("bernoulli_stirling check: negative index");
  const T x = q_integer(p, ctx);
  const T x1 = q_integer_complement(p, ctx);
  const auto bern = bernoulli_higher_egf(static_cast<std::size_t>(k), x1, static_cast<std::size_t>(n));
  T sum(0);
  for (int l = 0; l <= n; ++l) sum += binomial<T>(n, l) * bern[l] * stirling2<T>(n - l, k);
  return make_check(qbernstein1(k, n, p, ctx), T(ipow(x, k) * sum));
}

/// Bivariate form: B_{k,j;n,m}(x,y;q) against the product of the x- and
/// y-side decompositions.
template <Field T>
IdentityCheck<T> bernoulli_stirling_decomposition_check(const BasisIndex& idx, const EvalPoint2D<T>& pt,
                                                         const QContext<T>& ctx) {
  auto cx = bernoulli_stirling_univariate_check(idx.k, idx.n, pt.px(), ctx);
  auto cy = bernoulli_stirling_univariate_check(idx.j, idx.m, pt.py(), ctx);
  return make_check(qbernstein2(idx, pt, ctx), T(cx.rhs * cy.rhs));
}

// ---------------------------------------------------------------------------
// Contour integral

struct ContourSpec {
  double radius = 1.0;
  int nodes = 64;

  void validate() const {
    if (!(radius > 0.0)) throw DomainError("ContourSpec: radius must be positive");
    if (nodes < 16) throw DomainError("ContourSpec: at least 16 nodes per circle");
  }
};

/// Pairwise summation in index order; the result does not depend on threading
/// or evaluation order.
template <class V>
V pairwise_sum(std::span<const V> values) {
  if (values.empty()) return V{};
  if (values.size() <= 8) {
    V acc = values[0];
    for (std::size_t i = 1; i < values.size(); ++i) acc += values[i];
    return acc;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

namespace detail {

template <std::floating_point T>
std::complex<T> complex_ipow(std::complex<T> z, int e) {
  if (e < 0) {
    z = T(1) / z;
    e = -e;
  }
  std::complex<T> r(1);
  for (int i = 0; i < e; ++i) r *= z;
  return r;
}

}  // namespace detail

/// n! m! / (2 pi i)^2 times the double contour integral of
/// ([x] xi)^k ([y] rho)^j / (k! j!) e^{[1-x] xi + [1-y] rho} / (xi^(n+1) rho^(m+1))
/// by the trapezoid rule on |xi| = |rho| = radius.
template <std::floating_point T>
std::complex<T> contour_integral_eval(const BasisIndex& idx, const EvalPoint2D<T>& pt, const QContext<T>& ctx,
                                      const ContourSpec& spec = {}) {
  spec.validate();
  if (2 * (idx.n + idx.m) >= spec.nodes) throw DomainError("contour_integral_eval: too few nodes for n + m");
  using C = std::complex<T>;
  const T x = q_integer(pt.px(), ctx);
  const T x1 = q_integer_complement(pt.px(), ctx);
  const T y = q_integer(pt.py(), ctx);
  const T y1 = q_integer_complement(pt.py(), ctx);

  T fk(1), fj(1), fn(1), fm(1);
  for (int i = 2; i <= idx.k; ++i) fk *= i;
  for (int i = 2; i <= idx.j; ++i) fj *= i;
  for (int i = 2; i <= idx.n; ++i) fn *= i;
  for (int i = 2; i <= idx.m; ++i) fm *= i;

  // With z = r e^{i theta}, dz / (2 pi i z^(p+1)) = z^(-p) dtheta / (2 pi), so
  // each circle contributes (1/N) sum_s g(z_s) z_s^(-p).
  const int N = spec.nodes;
  std::vector<C> xi_factor(N), rho_factor(N);
  for (int s = 0; s < N; ++s) {
    const C z = std::polar(T(spec.radius), T(2) * std::numbers::pi_v<T> * T(s) / T(N));
    xi_factor[s] = detail::complex_ipow(x * z, idx.k) * std::exp(x1 * z) * detail::complex_ipow(z, -idx.n);
    rho_factor[s] = detail::complex_ipow(y * z, idx.j) * std::exp(y1 * z) * detail::complex_ipow(z, -idx.m);
  }
  std::vector<C> terms;
  terms.reserve(static_cast<std::size_t>(N) * N);
  for (int a = 0; a < N; ++a) {
    for (int b = 0; b < N; ++b) terms.push_back(xi_factor[a] * rho_factor[b]);
  }
  const C total = pairwise_sum<C>(terms);
  return total * (fn * fm / (fk * fj * T(N) * T(N)));
}

}  // namespace qbern2d
