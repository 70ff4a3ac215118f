#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qbern2d/interp.hpp"

using namespace qbern2d;

namespace {

InterpParams params(Complex s, int k, int j, EvalPoint2D<double> pt, int deriv = 0) {
  return InterpParams{s, k, j, pt, deriv};
}

EvalPoint2D<double> at(double x, double y, const QContext<double>& ctx) {
  return EvalPoint2D<double>(make_qpoint(x, ctx), make_qpoint(y, ctx));
}

EvalPoint2D<double> from_powers(double qx, double qy, const QContext<double>& ctx) {
  return EvalPoint2D<double>(make_qpoint_from_power(qx, ctx), make_qpoint_from_power(qy, ctx));
}

double relative(Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST(Gamma, Values) {
  EXPECT_NEAR(std::abs(gamma_function(1.0) - 1.0), 0.0, 1e-13);
  EXPECT_NEAR(gamma_function(5.0).real(), 24.0, 24e-12);
  EXPECT_NEAR(gamma_function(0.5).real(), std::sqrt(std::numbers::pi), 1e-12);
  EXPECT_THROW(gamma_function(0.0), DomainError);
  EXPECT_THROW(gamma_function(-3.0), DomainError);
  for (double x = 0.1; x <= 10.0; x += 0.37) {
    EXPECT_LE(std::abs(gamma_function(x).real() - std::tgamma(x)) / std::tgamma(x), 1e-12) << x;
  }
}

TEST(Gamma, ComplexIdentities) {
  // recurrence and reflection across the test domain
  for (double re = 0.25; re <= 9.0; re += 1.1) {
    for (double im = -10.0; im <= 10.0; im += 2.5) {
      const Complex s(re, im);
      const Complex g = gamma_function(s);
      EXPECT_LE(std::abs(gamma_function(s + 1.0) - s * g) / std::abs(s * g), 1e-12) << s;
      const Complex refl = g * gamma_function(1.0 - s) * std::sin(std::numbers::pi * s);
      EXPECT_LE(std::abs(refl - std::numbers::pi) / std::numbers::pi, 1e-11) << s;
    }
  }
}

TEST(InterpQ, Examples) {
  QContext<double> ctx(0.25);
  const auto origin = at(0.0, 0.0, ctx);
  EXPECT_NEAR(interp_q(params(1.0, 0, 0, origin), ctx).real(), 0.5, 1e-15);
  EXPECT_NEAR(std::abs(interp_q(params(Complex(0.0, 3.0), 0, 0, origin), ctx)), 1.0, 1e-14);

  const auto half = from_powers(0.5, 0.5, ctx);
  EXPECT_NEAR(interp_q(params(2.0, 1, 0, half), ctx).real(), -3.0 / 8.0, 1e-14);
  const double x = q_integer(half.px(), ctx);
  EXPECT_NEAR(interp_q(params(0.0, 2, 1, half), ctx).real(), -x * x * x / 2.0, 1e-14);

  const auto one = at(1.0, 1.0, ctx);
  EXPECT_THROW(interp_q(params(1.0, 0, 0, one), ctx), DomainError);
}

TEST(InterpClassical, Examples) {
  QContext<double> ctx(0.5);
  EXPECT_NEAR(interp_classical(params(1.0, 0, 0, at(0.0, 0.0, ctx))).real(), 0.5, 1e-15);
  EXPECT_NEAR(interp_classical(params(0.0, 1, 1, at(0.5, 0.5, ctx))).real(), 0.25, 1e-15);
  EXPECT_THROW(interp_classical(params(1.0, 0, 0, at(1.0, 1.0, ctx))), DomainError);
}

TEST(InterpClassical, Homogeneity) {
  QContext<double> ctx(0.5);
  for (double x : {0.0, 0.3, 0.8})
    for (double y : {0.1, 0.6})
      for (Complex s : {Complex(0.5, 0.0), Complex(2.0, -1.0), Complex(3.5, 4.0)}) {
        const auto pt = at(x, y, ctx);
        const Complex lhs = interp_classical(params(s + 1.0, 1, 2, pt)) * (2.0 - x - y);
        const Complex rhs = interp_classical(params(s, 1, 2, pt));
        EXPECT_LE(std::abs(lhs - rhs), 1e-12);
      }
}

TEST(InterpDerivative, Examples) {
  QContext<double> ctx(0.5);
  const auto origin = at(0.0, 0.0, ctx);
  EXPECT_NEAR(interp_s_derivative(params(1.0, 0, 0, origin, 0)).real(), 0.5, 1e-15);
  EXPECT_NEAR(interp_s_derivative(params(1.0, 0, 0, origin, 1)).real(), std::log(0.5) * 0.5, 1e-15);
}

TEST(InterpDerivative, RatioIsLogPower) {
  QContext<double> ctx(0.5);
  for (double x : {0.1, 0.2, 0.7})
    for (double y : {0.4, 0.9})
      for (int m = 0; m <= 3; ++m) {
        const auto pt = at(x, y, ctx);
        const Complex s(1.5, 0.5);
        const Complex ratio = interp_s_derivative(params(s, 2, 1, pt, m)) / interp_classical(params(s, 2, 1, pt));
        EXPECT_LE(std::abs(ratio - std::pow(std::log(1.0 / (2.0 - x - y)), m)), 1e-10);
      }
}

TEST(InterpDerivative, FiniteDifferences) {
  const double h = 1e-4;
  for (double q : {0.3, 0.5}) {
    QContext<double> ctx(q);
    const auto pt = at(0.3, 0.4, ctx);
    for (Complex s : {Complex(1.0, 0.0), Complex(2.0, 0.5)}) {
      auto f = [&](Complex t, int m) { return interp_s_derivative(params(t, 1, 1, pt, m)); };
      auto g = [&](Complex t, int m) { return interp_q_s_derivative(params(t, 1, 1, pt, m), ctx); };
      for (auto fn : {std::function<Complex(Complex, int)>(f), std::function<Complex(Complex, int)>(g)}) {
        const Complex d1 = (fn(s + h, 0) - fn(s - h, 0)) / (2 * h);
        EXPECT_LE(relative(d1, fn(s, 1)), 1e-6);
        const Complex d2 = (fn(s + h, 0) - 2.0 * fn(s, 0) + fn(s - h, 0)) / (h * h);
        EXPECT_LE(relative(d2, fn(s, 2)), 1e-6);
        const Complex d3 = (fn(s + h, 2) - fn(s - h, 2)) / (2 * h);
        EXPECT_LE(relative(d3, fn(s, 3)), 1e-6);
      }
    }
  }
}

TEST(InterpQ, ClassicalLimit) {
  QContext<double> ctx(1.0 - 1e-8);
  for (double x : {0.0, 0.5, 0.9})
    for (double y : {0.25, 0.75})
      for (int k = 0; k <= 2; ++k) {
        const auto pt = at(x, y, ctx);
        const auto p = params(Complex(2.0, 1.0), k, 2 - k, pt);
        EXPECT_LE(std::abs(interp_q(p, ctx) - interp_classical(p)), 1e-5);
      }
}

TEST(Mellin, Examples) {
  QContext<double> ctx(0.25);
  auto r0 = mellin_consistency_check(params(2.0, 0, 0, at(0.0, 0.0, ctx)), ctx);
  EXPECT_NEAR(r0.quadrature.real(), 0.25, 1e-10);
  EXPECT_LE(r0.abs_difference, 1e-10);

  auto r1 = mellin_consistency_check(params(2.0, 1, 0, from_powers(0.5, 0.5, ctx)), ctx);
  EXPECT_NEAR(r1.quadrature.real(), -3.0 / 8.0, 1e-8);

  EXPECT_THROW(mellin_consistency_check(params(Complex(0.0, 1.0), 0, 0, at(0.0, 0.0, ctx)), ctx), DomainError);
  EXPECT_THROW(mellin_consistency_check(params(2.0, 0, 0, at(0.0, 0.0, ctx)), ctx, QuadratureSpec{16}), DomainError);
}

TEST(Mellin, SweepAtExactPoints) {
  for (double q : {0.25, 1.0 / 6.0}) {
    QContext<double> ctx(q);
    for (double qx : {0.5, 1.0 / 3.0})
      for (double qy : {0.5, 1.0 / 3.0}) {
        const auto pt = from_powers(qx, qy, ctx);
        for (int k = 0; k <= 4; ++k)
          for (int j = 0; k + j <= 4; ++j)
            for (double s : {1.0, 2.0, 3.5}) {
              auto r = mellin_consistency_check(params(s, k, j, pt), ctx);
              EXPECT_LE(r.abs_difference, 1e-8) << k << "," << j << " s=" << s;
            }
      }
  }
}

TEST(Mellin, ComplexExponent) {
  QContext<double> ctx(0.5);
  auto r = mellin_consistency_check(params(Complex(1.5, 2.0), 1, 1, at(0.3, 0.6, ctx)), ctx);
  EXPECT_LE(r.abs_difference, 1e-8);
  // a small real part makes the integrand singular at 0
  auto low = mellin_consistency_check(params(Complex(0.5, 0.0), 0, 0, at(0.2, 0.2, ctx)), ctx);
  EXPECT_LE(low.abs_difference, 1e-8);
}
