#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "qbern2d/basis.hpp"

using namespace qbern2d;

namespace {

Rational R(long long p, long long q = 1) { return Rational(p, q); }

EvalPoint2D<Rational> exact_point(const Rational& qx, const Rational& qy, const QContext<Rational>& ctx) {
  return EvalPoint2D<Rational>(make_qpoint_exact(qx, ctx), make_qpoint_exact(qy, ctx));
}

EvalPoint2D<double> float_point(double x, double y, const QContext<double>& ctx) {
  return EvalPoint2D<double>(make_qpoint(x, ctx), make_qpoint(y, ctx));
}

// Closed form written out directly from the q-integers, independent of the
// library's factorization.
Rational closed_form(const BasisIndex& i, const Rational& x, const Rational& x1, const Rational& y,
                     const Rational& y1) {
  if (i.k > i.n || i.j > i.m) return 0;
  return Rational(binomial_int(i.n, i.k) * binomial_int(i.m, i.j)) * ipow(x, i.k) * ipow(y, i.j) * ipow(x1, i.n - i.k) *
         ipow(y1, i.m - i.j);
}

}  // namespace

TEST(BasisIndex, RejectsNegativeEntries) {
  EXPECT_THROW(BasisIndex(-1, 0, 1, 1), DomainError);
  EXPECT_TRUE(BasisIndex(1, 1, 1, 1).in_range());
  EXPECT_FALSE(BasisIndex(2, 0, 1, 1).in_range());
}

TEST(BasisSize, CountsIndices) {
  for (std::size_t n = 0; n <= 6; ++n) {
    for (std::size_t m = 0; m <= 6; ++m) {
      std::size_t count = 0;
      for (std::size_t k = 0; k <= n; ++k)
        for (std::size_t j = 0; j <= m; ++j) ++count;
      EXPECT_EQ(basis_size(n, m), count);
      EXPECT_EQ(basis_size(n, m), n * m + n + m + 1);
    }
  }
}

TEST(ClassicalBasis, ListedPolynomials) {
  EXPECT_NEAR(bernstein2_classical(BasisIndex(1, 1, 1, 1), 0.3, 0.7), 0.21, 1e-15);
  const Rational x = R(2, 7), y = R(3, 5);
  EXPECT_EQ(bernstein2_classical(BasisIndex(0, 0, 1, 1), x, y), (1 - x) * (1 - y));
  EXPECT_EQ(bernstein2_classical(BasisIndex(0, 1, 1, 1), x, y), y * (1 - x));
  EXPECT_EQ(bernstein2_classical(BasisIndex(1, 0, 1, 1), x, y), x * (1 - y));
  EXPECT_EQ(bernstein2_classical(BasisIndex(0, 0, 1, 0), x, y), 1 - x);
  EXPECT_EQ(bernstein2_classical(BasisIndex(0, 0, 0, 1), x, y), 1 - y);
  EXPECT_EQ(bernstein2_classical(BasisIndex(2, 0, 1, 1), x, y), R(0));
  EXPECT_THROW(bernstein2_classical(BasisIndex(0, 0, 1, 1), 1.5, 0.5), DomainError);
  EXPECT_THROW(bernstein2_classical(BasisIndex(0, 0, 1, 1), R(1, 2), R(-1, 2)), DomainError);
}

TEST(ClassicalBasis, PartitionOfUnity) {
  for (auto x : {R(0), R(1, 3), R(1)}) {
    for (auto y : {R(1, 2), R(5, 7)}) {
      for (int n = 0; n <= 8; ++n) {
        for (int m = 0; m <= 8; ++m) {
          Rational sum = 0;
          for (int k = 0; k <= n; ++k)
            for (int j = 0; j <= m; ++j) sum += bernstein2_classical(BasisIndex(k, j, n, m), x, y);
          EXPECT_EQ(sum, 1);
        }
      }
    }
  }
}

TEST(QBernstein, UnivariateExamples) {
  QContext<Rational> ctx(R(1, 4));
  auto p = make_qpoint_exact(R(1, 2), ctx);
  EXPECT_EQ(qbernstein1(0, 0, p, ctx), R(1));
  EXPECT_EQ(qbernstein1(1, 2, p, ctx), R(8, 9));
  auto one = make_qpoint_exact(ctx.q(), ctx);
  for (int n = 0; n <= 4; ++n) {
    for (int k = 0; k <= n; ++k) EXPECT_EQ(qbernstein1(k, n, one, ctx), k == n ? R(1) : R(0));
  }
}

TEST(QBernstein, BivariateExamples) {
  QContext<Rational> ctx(R(1, 4));
  const auto pt = exact_point(R(1, 2), R(1, 2), ctx);
  EXPECT_EQ(qbernstein2(BasisIndex(1, 1, 2, 2), pt, ctx), R(64, 81));
  EXPECT_EQ(qbernstein2(BasisIndex(0, 3, 2, 2), pt, ctx), R(0));

  QContext<double> near_one(1.0 - 1e-8);
  EXPECT_NEAR(qbernstein2(BasisIndex(1, 1, 1, 1), float_point(0.3, 0.7, near_one), near_one), 0.21, 1e-6);
}

TEST(QBernstein, ProductFormAndClosedForm) {
  QContext<Rational> ctx(R(1, 6));
  const auto pt = exact_point(R(1, 2), R(1, 3), ctx);
  const Rational x = q_integer(pt.px(), ctx), x1 = q_integer_complement(pt.px(), ctx);
  const Rational y = q_integer(pt.py(), ctx), y1 = q_integer_complement(pt.py(), ctx);
  for (int n = 0; n <= 6; ++n)
    for (int m = 0; m <= 6; ++m)
      for (int k = 0; k <= n + 1; ++k)
        for (int j = 0; j <= m + 1; ++j) {
          const BasisIndex idx(k, j, n, m);
          const Rational v = qbernstein2(idx, pt, ctx);
          EXPECT_EQ(v, closed_form(idx, x, x1, y, y1));
          EXPECT_EQ(v, qbernstein1(k, n, pt.px(), ctx) * qbernstein1(j, m, pt.py(), ctx));
        }
}

TEST(QBernstein, PointsFromDifferentQRejected) {
  QContext<Rational> a(R(1, 4)), b(R(1, 3));
  EXPECT_THROW(EvalPoint2D<Rational>(make_qpoint_exact(R(1, 2), a), make_qpoint_exact(R(1, 2), b)), DomainError);
  EXPECT_THROW(qbernstein2(BasisIndex(0, 0, 1, 1), exact_point(R(1, 2), R(1, 2), a), b), DomainError);
}

TEST(Recurrence, Examples) {
  QContext<Rational> ctx(R(1, 4));
  const auto pt = exact_point(R(1, 2), R(1, 3), ctx);
  EXPECT_EQ(recurrence_eval(BasisIndex(0, 0, 0, 0), pt, ctx), R(1));
  EXPECT_EQ(recurrence_eval(BasisIndex(1, 1, 1, 1), pt, ctx), q_integer(pt.px(), ctx) * q_integer(pt.py(), ctx));
  const auto mid = exact_point(R(1, 2), R(1, 2), ctx);
  EXPECT_EQ(recurrence_eval(BasisIndex(1, 1, 2, 2), mid, ctx), R(64, 81));
  EXPECT_EQ(recurrence_eval(BasisIndex(3, 0, 2, 2), mid, ctx), R(0));
}

TEST(Recurrence, MatchesClosedFormEverywhere) {
  for (auto q : {R(1, 4), R(1, 6)}) {
    QContext<Rational> ctx(q);
    const auto pt = exact_point(R(1, 3), q, ctx);
    for (int n = 0; n <= 8; ++n)
      for (int m = 0; m <= 8; ++m) {
        const auto grid = recurrence_table(n, m, pt, ctx);
        for (int k = 0; k <= n; ++k)
          for (int j = 0; j <= m; ++j) EXPECT_EQ(grid.at(k, j), qbernstein2(BasisIndex(k, j, n, m), pt, ctx));
      }
  }
}

TEST(Symmetry, Examples) {
  QContext<Rational> ctx(R(1, 4));
  const auto sym = exact_point(R(1, 2), R(1, 2), ctx);  // q^x = q^(1-x) = sqrt(q)
  for (int k = 0; k <= 3; ++k)
    for (int j = 0; j <= 2; ++j) {
      auto [a, b] = symmetry_pair(BasisIndex(k, j, 3, 2), sym, ctx);
      EXPECT_EQ(a, b);
    }
  QContext<Rational> sixth(R(1, 6));
  auto [a, b] = symmetry_pair(BasisIndex(1, 0, 2, 1), exact_point(R(1, 2), R(1, 3), sixth), sixth);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, 0);

  // classical: reflecting (0,0;1,1) gives (1,1;1,1) at (1-x, 1-y)
  const double x = 0.3, y = 0.8;
  EXPECT_DOUBLE_EQ(bernstein2_classical(BasisIndex(1, 1, 1, 1), 1 - x, 1 - y),
                   bernstein2_classical(BasisIndex(0, 0, 1, 1), x, y));
}

TEST(Symmetry, HoldsForAllSmallDegrees) {
  QContext<Rational> ctx(R(1, 6));
  for (auto qx : {R(1), R(1, 2), R(1, 3), R(1, 6)}) {
    const auto pt = exact_point(qx, R(2, 3), ctx);
    for (int n = 0; n <= 6; ++n)
      for (int m = 0; m <= 6; ++m)
        for (int k = 0; k <= n; ++k)
          for (int j = 0; j <= m; ++j) {
            auto [a, b] = symmetry_pair(BasisIndex(k, j, n, m), pt, ctx);
            EXPECT_EQ(a, b);
          }
  }
}

TEST(Derivative, ZeroDegreeAndAnalyticCase) {
  QContext<double> ctx(0.5);
  const auto pt = float_point(0.4, 0.6, ctx);
  EXPECT_EQ(derivative_xy(BasisIndex(0, 0, 0, 3), pt, ctx), 0.0);
  EXPECT_EQ(derivative_xy(BasisIndex(1, 0, 2, 0), pt, ctx), 0.0);
  // d/dx [x]_q = q^x ln q / (q - 1)
  const double lq = std::log(0.5);
  const double expected = (std::pow(0.5, 0.4) * lq / (0.5 - 1)) * (std::pow(0.5, 0.6) * lq / (0.5 - 1));
  EXPECT_NEAR(derivative_xy(BasisIndex(1, 1, 1, 1), pt, ctx), expected, 1e-14);
}

TEST(Derivative, MatchesCentralDifferences) {
  const double h = 1e-5;
  for (double q : {0.3, 0.5, 0.9}) {
    QContext<double> ctx(q);
    for (double x : {0.2, 0.4, 0.7})
      for (double y : {0.3, 0.6}) {
        for (int n = 1; n <= 4; ++n)
          for (int m = 1; m <= 4; ++m)
            for (int k = 0; k <= n; ++k)
              for (int j = 0; j <= m; ++j) {
                const BasisIndex idx(k, j, n, m);
                auto f = [&](double u, double v) { return qbernstein2(idx, float_point(u, v, ctx), ctx); };
                const double fd = (f(x + h, y + h) - f(x + h, y - h) - f(x - h, y + h) + f(x - h, y - h)) / (4 * h * h);
                const double an = derivative_xy(idx, float_point(x, y, ctx), ctx);
                EXPECT_LE(std::abs(fd - an), 1e-5 * std::max(1.0, std::abs(an)));
              }
      }
  }
}

TEST(DegreeElevation, Examples) {
  QContext<Rational> ctx(R(1, 4));
  const auto pt = exact_point(R(1, 2), R(1, 2), ctx);
  auto c0 = degree_elevation_check(BasisIndex(0, 0, 0, 0), pt, ctx);
  EXPECT_TRUE(c0.exactly_zero());
  // the (1,1) basis sums to the product of the two factors
  const Rational x = q_integer(pt.px(), ctx), x1 = q_integer_complement(pt.px(), ctx);
  EXPECT_EQ(c0.lhs, (1 + R(3, 4) * x * x1) * (1 + R(3, 4) * x * x1));
  EXPECT_TRUE(degree_elevation_check(BasisIndex(1, 1, 2, 2), pt, ctx).exactly_zero());

  QContext<double> near_one(1.0 - 1e-8);
  auto c = degree_elevation_check(BasisIndex(1, 2, 3, 3), float_point(0.3, 0.6, near_one), near_one);
  EXPECT_NEAR(c.lhs, bernstein2_classical(BasisIndex(1, 2, 3, 3), 0.3, 0.6), 1e-6);
}

TEST(Ratio, ExamplesAndErrors) {
  QContext<Rational> ctx(R(1, 6));
  const auto pt = exact_point(R(1, 2), R(1, 3), ctx);
  EXPECT_TRUE(ratio_identity_check(BasisIndex(1, 1, 1, 1), pt, ctx).exactly_zero());
  auto c = ratio_identity_check(BasisIndex(2, 1, 3, 2), pt, ctx);
  EXPECT_TRUE(c.exactly_zero());
  EXPECT_NE(c.lhs, 0);
  EXPECT_THROW(ratio_identity_check(BasisIndex(1, 1, 2, 2), exact_point(R(1, 6), R(1, 2), ctx), ctx), DivisionByZero);
  EXPECT_THROW(ratio_identity_check(BasisIndex(0, 1, 2, 2), pt, ctx), DomainError);
}

TEST(PowerExpansion, Coefficients) {
  auto top = power_expansion(BasisIndex(3, 2, 3, 2));
  ASSERT_EQ(top.size(), 1u);
  EXPECT_EQ(top[0].coefficient, 1);
  EXPECT_EQ(top[0].l, 3);
  EXPECT_EQ(top[0].r, 2);

  // [1-x]_q = 1 - q^(1-x) [x]_q
  auto lin = power_expansion(BasisIndex(0, 0, 1, 0));
  ASSERT_EQ(lin.size(), 2u);
  EXPECT_EQ(lin[0].coefficient, 1);
  EXPECT_EQ(lin[0].x_shift, 0);
  EXPECT_EQ(lin[1].coefficient, -1);
  EXPECT_EQ(lin[1].x_shift, 1);
  EXPECT_EQ(lin[1].l, 1);

  QContext<Rational> ctx(R(1, 6));
  EXPECT_TRUE(power_expansion_check(BasisIndex(1, 0, 2, 1), exact_point(R(1, 2), R(1, 3), ctx), ctx).exactly_zero());
  EXPECT_TRUE(power_expansion(BasisIndex(3, 0, 2, 1)).empty());
}

TEST(WeightedSum, Examples) {
  QContext<Rational> ctx(R(1, 4));
  const auto pt = exact_point(R(1, 2), R(1, 2), ctx);
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m) {
      auto c = weighted_sum_identity_check(0, n, m, pt, ctx);
      EXPECT_EQ(c.lhs, 1);
      EXPECT_TRUE(c.exactly_zero());
    }
  auto top = weighted_sum_identity_check(3, 3, 3, pt, ctx);
  EXPECT_TRUE(top.exactly_zero());
  EXPECT_TRUE(weighted_sum_identity_check(1, 2, 2, pt, ctx).exactly_zero());
  EXPECT_THROW(weighted_sum_identity_check(3, 2, 4, pt, ctx), DomainError);
}

TEST(QStirlingWeightedSum, HoldsAtExactPoints) {
  QContext<Rational> ctx(R(1, 3));
  const auto pt = exact_point(R(1, 2), R(2, 3), ctx);
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; m <= 4; ++m)
      for (int l = 0; l <= std::min(n, m); ++l) EXPECT_TRUE(qstirling_weighted_sum_check(l, n, m, pt, ctx).exactly_zero());
}
