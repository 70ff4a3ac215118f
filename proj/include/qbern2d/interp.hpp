#pragma once

// The interpolation function S_q(s,k,j;x,y) obtained from the Mellin transform
// of the generating function, its classical limit, its s-derivatives, and a
// quadrature check of the Mellin integral.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "qbern2d/basis.hpp"
#include "qbern2d/error.hpp"
#include "qbern2d/scalar.hpp"

namespace qbern2d {

using Complex = std::complex<double>;

/// Gamma function for complex arguments (Lanczos, g = 7, nine terms, with the
/// reflection formula for Re(s) < 1/2).
inline Complex gamma_function(Complex s) {
  if (s.imag() == 0.0 && s.real() <= 0.0 && std::floor(s.real()) == s.real()) {
    throw DomainError("gamma_function: pole at a nonpositive integer");
  }
  constexpr double pi = std::numbers::pi;
  if (s.real() < 0.5) return pi / (std::sin(pi * s) * gamma_function(1.0 - s));

  static constexpr double coeffs[] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                                      771.32342877765313,   -176.61502916214059,   12.507343278686905,
                                      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  constexpr double g = 7.0;
  const Complex z = s - 1.0;
  Complex series = coeffs[0];
  for (int i = 1; i < 9; ++i) series += coeffs[i] / (z + double(i));
  const Complex t = z + g + 0.5;
  return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * series;
}

struct InterpParams {
  Complex s;
  int k = 0;
  int j = 0;
  EvalPoint2D<double> pt;
  int deriv_order = 0;
};

struct QuadratureSpec {
  /// Gauss-Legendre nodes per panel.
  int nodes = 32;
  double abs_tol = 1e-10;
  /// Largest bisection depth of a panel on [0, T].
  int max_depth = 50;

  void validate() const {
    if (nodes < 32) throw DomainError("QuadratureSpec: at least 32 nodes");
    if (!(abs_tol > 0.0)) throw DomainError("QuadratureSpec: abs_tol must be positive");
  }
};

namespace detail {

inline double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline void require_interp_domain(const InterpParams& p) {
  if (p.k < 0 || p.j < 0 || p.deriv_order < 0) throw DomainError("interpolation indices must be nonnegative");
  // x = 1 exactly when q^(1-x) = 1.
  if (p.pt.px().q1mx() == 1.0 || p.pt.py().q1mx() == 1.0) {
    throw DomainError("interpolation function needs x != 1 and y != 1");
  }
}

// (-1)^(k+j) a^k b^j / (k! j!) base^(-s)
inline Complex power_form(int k, int j, double a, double b, double base, Complex s) {
  const double sign = (k + j) % 2 == 0 ? 1.0 : -1.0;
  const double prefactor = sign * std::pow(a, k) * std::pow(b, j) / (factorial(k) * factorial(j));
  return prefactor * std::exp(-s * std::log(base));
}

inline double q_base(const InterpParams& p, const QContext<double>& ctx) {
  return q_integer_complement(p.pt.px(), ctx) + q_integer_complement(p.pt.py(), ctx);
}

inline std::pair<double, double> classical_coordinates(const InterpParams& p) {
  if (!p.pt.px().x() || !p.pt.py().x()) throw DomainError("classical interpolation needs the coordinates x, y");
  return {*p.pt.px().x(), *p.pt.py().x()};
}

}  // namespace detail

/// S_q(s,k,j;x,y) = (-1)^(k+j) [x]^k [y]^j / (k! j!) ([1-x]_q + [1-y]_q)^(-s).
inline Complex interp_q(const InterpParams& p, const QContext<double>& ctx) {
  detail::require_interp_domain(p);
  return detail::power_form(p.k, p.j, q_integer(p.pt.px(), ctx), q_integer(p.pt.py(), ctx), detail::q_base(p, ctx),
                            p.s);
}

/// S(s,k,j;x,y) = (-1)^(k+j) x^k y^j / (k! j!) (2 - (x+y))^(-s).
inline Complex interp_classical(const InterpParams& p) {
  detail::require_interp_domain(p);
  const auto [x, y] = detail::classical_coordinates(p);
  const double base = 2.0 - (x + y);
  if (!(base > 0.0)) throw DomainError("interp_classical: pole at x + y = 2");
  return detail::power_form(p.k, p.j, x, y, base, p.s);
}

/// d^m/ds^m S(s,k,j;x,y) = log^m(1/(2-(x+y))) S(s,k,j;x,y), m = deriv_order.
inline Complex interp_s_derivative(const InterpParams& p) {
  const auto [x, y] = detail::classical_coordinates(p);
  return std::pow(std::log(1.0 / (2.0 - (x + y))), p.deriv_order) * interp_classical(p);
}

/// q-deformed counterpart: log^m(1/([1-x]_q+[1-y]_q)) S_q(s,k,j;x,y). This
/// extends the classical derivative formula to q != 1.
inline Complex interp_q_s_derivative(const InterpParams& p, const QContext<double>& ctx) {
  const Complex value = interp_q(p, ctx);
  return std::pow(std::log(1.0 / detail::q_base(p, ctx)), p.deriv_order) * value;
}

/// Gauss-Legendre nodes and weights on [-1, 1].
inline void gauss_legendre(int count, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(count, 0.0);
  weights.assign(count, 0.0);
  for (int i = 0; i < (count + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (count + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int r = 1; r <= count; ++r) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * r - 1.0) * z * p1 - (r - 1.0) * p2) / r;
      }
      dp = count * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    nodes[i] = -z;
    nodes[count - 1 - i] = z;
    weights[i] = weights[count - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
}

struct MellinReport {
  Complex quadrature;
  Complex closed_form;
  double abs_difference = 0.0;
  /// Quadrature error estimate plus the analytic tail bound.
  double error_estimate = 0.0;
  double split_point = 0.0;
};

/// (1/Gamma(s)) int_0^inf F_{k,j}(-t,q;x,y) t^(s-k-j-1) dt by adaptive
/// Gauss-Legendre panels on [0,T] and an analytic bound on the tail, compared
/// with interp_q.
inline MellinReport mellin_consistency_check(const InterpParams& p, const QContext<double>& ctx,
                                             const QuadratureSpec& quad = {}) {
  quad.validate();
  detail::require_interp_domain(p);
  const double sigma = p.s.real();
  if (!(sigma > 0.0)) throw DomainError("mellin_consistency_check needs Re(s) > 0");

  const double x = q_integer(p.pt.px(), ctx);
  const double y = q_integer(p.pt.py(), ctx);
  const double a = detail::q_base(p, ctx);
  const double kj_fact = detail::factorial(p.k) * detail::factorial(p.j);
  const Complex exponent = p.s - double(p.k + p.j + 1);

  // F(-t) t^(s-k-j-1), evaluated as written.
  auto integrand = [&](double t) -> Complex {
    const double gen = std::pow(-t * x, p.k) * std::pow(-t * y, p.j) / kj_fact * std::exp(-t * a);
    return gen * std::exp(exponent * std::log(t));
  };

  const Complex inv_gamma = 1.0 / gamma_function(p.s);
  const double magnitude = std::pow(x, p.k) * std::pow(y, p.j) / kj_fact * std::abs(inv_gamma);

  // |integrand| = magnitude * t^(sigma-1) e^(-a t) (up to 1/|Gamma|). Past
  // t0 = 2(sigma-1)/a the log-derivative is below -a/2.
  auto tail_bound = [&](double T) {
    const double decay = sigma > 1.0 ? 2.0 / a : 1.0 / a;
    return magnitude * std::pow(T, sigma - 1.0) * std::exp(-a * T) * decay;
  };
  double T = std::max(1.0, 2.0 * (sigma - 1.0) / a);
  while (tail_bound(T) > quad.abs_tol / 10.0) T *= 1.25;

  // For Re(s) < 1 the substitution t = u^r with r = 2/Re(s) removes the
  // t^(Re(s)-1) singularity at the origin.
  const double r = sigma < 1.0 ? 2.0 / sigma : 1.0;
  const double U = std::pow(T, 1.0 / r);
  auto smooth = [&](double u) -> Complex {
    if (r == 1.0) return integrand(u);
    return integrand(std::pow(u, r)) * r * std::pow(u, r - 1.0);
  };

  std::vector<double> gl_nodes, gl_weights;
  gauss_legendre(quad.nodes, gl_nodes, gl_weights);
  auto panel = [&](double lo, double hi) {
    const double half = 0.5 * (hi - lo), mid = 0.5 * (hi + lo);
    Complex acc = 0.0;
    for (int i = 0; i < quad.nodes; ++i) acc += gl_weights[i] * smooth(mid + half * gl_nodes[i]);
    return acc * half;
  };

  double error = 0.0;
  long panels_left = 1L << 16;
  auto adapt = [&](auto&& self, double lo, double hi, Complex whole, int depth) -> Complex {
    if (--panels_left < 0) throw ConvergenceError("mellin_consistency_check: panel budget exhausted");
    const double mid = 0.5 * (lo + hi);
    const Complex left = panel(lo, mid);
    const Complex right = panel(mid, hi);
    const double diff = std::abs(left + right - whole) * std::abs(inv_gamma);
    const double local_tol = quad.abs_tol * std::max(0.5 * (hi - lo) / U, 1e-6);
    if (diff <= local_tol || depth >= quad.max_depth) {
      if (diff > local_tol) error += diff;
      else error += diff / 10.0;
      return left + right;
    }
    return self(self, lo, mid, left, depth + 1) + self(self, mid, hi, right, depth + 1);
  };
  const Complex integral = adapt(adapt, 0.0, U, panel(0.0, U), 0) * inv_gamma;

  MellinReport report;
  report.quadrature = integral;
  report.closed_form = interp_q(p, ctx);
  report.abs_difference = std::abs(report.quadrature - report.closed_form);
  report.error_estimate = error + tail_bound(T);
  report.split_point = T;
  if (report.error_estimate > quad.abs_tol) {
    throw ConvergenceError("mellin_consistency_check: quadrature error estimate exceeds abs_tol");
  }
  return report;
}

}  // namespace qbern2d
