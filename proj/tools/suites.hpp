#pragma once

// Identity-verification suites behind `qbern2d verify`. Each suite sweeps a
// fixed, ordered set of cases and reports counts plus either the first exact
// counterexample or the worst floating-point error.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "qbern2d/qbern2d.hpp"

namespace qbern2d::cli {

struct VerificationReport {
  std::string suite;
  bool exact = true;
  long cases_run = 0;
  long cases_passed = 0;
  /// Float suites: max |error| (relative where the suite says so).
  double worst_error = 0.0;
  double tolerance = 0.0;
  std::string first_failure;
  double seconds = 0.0;

  bool passed() const { return cases_run > 0 && cases_run == cases_passed; }
};

struct SuiteRanges {
  int exact_max = 6;
  int float_max = 4;
  int bernoulli_k_max = 4;
  int bernoulli_n_max = 6;
  std::size_t egf_order = 12;
  /// Replaces every float suite's own tolerance when set.
  std::optional<double> tolerance;
};

namespace detail {

class Tally {
 public:
  Tally(std::string name, bool exact, double tol = 0.0) {
    report_.suite = std::move(name);
    report_.exact = exact;
    report_.tolerance = tol;
  }

  template <class Describe>
  void exact_case(bool ok, Describe&& describe) {
    ++report_.cases_run;
    if (ok) ++report_.cases_passed;
    else if (report_.first_failure.empty()) report_.first_failure = describe();
  }

  template <class Describe>
  void float_case(double err, Describe&& describe) {
    ++report_.cases_run;
    const bool ok = std::isfinite(err) && err <= report_.tolerance;
    if (ok) ++report_.cases_passed;
    else if (report_.first_failure.empty()) report_.first_failure = describe() + " error=" + format_double(err);
    if (!std::isfinite(err)) report_.worst_error = err;
    else if (std::isfinite(report_.worst_error)) report_.worst_error = std::max(report_.worst_error, err);
  }

  template <class Describe>
  void failed_case(const std::exception& e, Describe&& describe) {
    ++report_.cases_run;
    if (report_.first_failure.empty()) report_.first_failure = describe() + ": " + e.what();
  }

  VerificationReport& report() { return report_; }

 private:
  VerificationReport report_;
};

inline std::string describe_index(const BasisIndex& i) {
  std::ostringstream os;
  os << "k=" << i.k << " j=" << i.j << " n=" << i.n << " m=" << i.m;
  return os.str();
}

template <Field T>
std::string describe_point(const EvalPoint2D<T>& pt, const QContext<T>& ctx) {
  std::ostringstream os;
  if constexpr (is_exact_v<T>) {
    os << "qx=" << format_rational(pt.px().qx()) << " qy=" << format_rational(pt.py().qx())
       << " q=" << format_rational(ctx.q());
  } else {
    os << "x=" << format_double(pt.px().x_as_double()) << " y=" << format_double(pt.py().x_as_double())
       << " q=" << format_double(ctx.q());
  }
  return os.str();
}

struct ExactSetting {
  QContext<Rational> ctx;
  EvalPoint2D<Rational> pt;
};

/// q in {1/4, 1/6}; q^x, q^y in {1/2, 1/3, q} (the last is x = 1).
inline std::vector<ExactSetting> exact_settings(bool include_unit_x = true) {
  std::vector<ExactSetting> out;
  for (const Rational q : {Rational(1, 4), Rational(1, 6)}) {
    QContext<Rational> ctx(q);
    std::vector<Rational> powers{Rational(1, 2), Rational(1, 3)};
    if (include_unit_x) powers.push_back(q);
    for (const auto& qx : powers)
      for (const auto& qy : powers)
        out.push_back({ctx, EvalPoint2D<Rational>(make_qpoint_exact(qx, ctx), make_qpoint_exact(qy, ctx))});
  }
  return out;
}

template <class Body>
VerificationReport timed(Body&& body) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r = body();
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline double tol_or(const SuiteRanges& r, double fallback) { return r.tolerance.value_or(fallback); }

inline const std::vector<double>& float_qs() {
  static const std::vector<double> qs{0.3, 0.5, 0.9};
  return qs;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Exact suites

inline VerificationReport suite_partition(const SuiteRanges& r) {
  return detail::timed([&] {
    detail::Tally t("partition", true);
    const Rational xs[] = {Rational(0), Rational(1, 3), Rational(1)};
    const Rational ys[] = {Rational(1, 2), Rational(2, 9), Rational(1)};
    for (int n = 0; n <= r.exact_max; ++n)
      for (int m = 0; m <= r.exact_max; ++m)
        for (const auto& x : xs)
          for (const auto& y : ys) {
            Rational sum = 0;
            for (int k = 0; k <= n; ++k)
              for (int j = 0; j <= m; ++j) sum += bernstein2_classical(BasisIndex(k, j, n, m), x, y);
            t.exact_case(sum == 1, [&] {
              return "n=" + std::to_string(n) + " m=" + std::to_string(m) + " x=" + format_rational(x) +
                     " y=" + format_rational(y);
            });
          }
    return t.report();
  });
}

inline VerificationReport suite_recurrence(const SuiteRanges& r) {
  return detail::timed([&] {
    detail::Tally t("recurrence", true);
    for (const auto& s : detail::exact_settings())
      for (int n = 0; n <= r.exact_max; ++n)
        for (int m = 0; m <= r.exact_max; ++m) {
          const auto grid = recurrence_table(n, m, s.pt, s.ctx);
          for (int k = 0; k <= n; ++k)
            for (int j = 0; j <= m; ++j) {
              const BasisIndex idx(k, j, n, m);
              t.exact_case(grid.at(k, j) == qbernstein2(idx, s.pt, s.ctx), [&] {
                return detail::describe_index(idx) + " " + detail::describe_point(s.pt, s.ctx);
              });
            }
        }
    return t.report();
  });
}

template <class Check>
VerificationReport exact_index_sweep(const std::string& name, int max, bool include_unit_x, int min_kj, Check&& check) {
  detail::Tally t(name, true);
  for (const auto& s : detail::exact_settings(include_unit_x))
    for (int n = 0; n <= max; ++n)
      for (int m = 0; m <= max; ++m)
        for (int k = min_kj; k <= n; ++k)
          for (int j = min_kj; j <= m; ++j) {
            const BasisIndex idx(k, j, n, m);
            auto describe = [&] { return detail::describe_index(idx) + " " + detail::describe_point(s.pt, s.ctx); };
            try {
              t.exact_case(check(idx, s), describe);
            } catch (const std::exception& e) {
              t.failed_case(e, describe);
            }
          }
  return t.report();
}

inline VerificationReport suite_symmetry(const SuiteRanges& r) {
  return detail::timed([&] {
    return exact_index_sweep("symmetry", r.exact_max, true, 0, [](const BasisIndex& idx, const detail::ExactSetting& s) {
      auto [mirrored, original] = symmetry_pair(idx, s.pt, s.ctx);
      return mirrored == original;
    });
  });
}

inline VerificationReport suite_elevation(const SuiteRanges& r) {
  return detail::timed([&] {
    return exact_index_sweep("elevation", r.exact_max, true, 0, [](const BasisIndex& idx, const detail::ExactSetting& s) {
      return degree_elevation_check(idx, s.pt, s.ctx).exactly_zero();
    });
  });
}

inline VerificationReport suite_ratio(const SuiteRanges& r) {
  // x = 1 or y = 1 makes the ratio undefined; those points are not swept.
  return detail::timed([&] {
    return exact_index_sweep("ratio", r.exact_max, false, 1, [](const BasisIndex& idx, const detail::ExactSetting& s) {
      return ratio_identity_check(idx, s.pt, s.ctx).exactly_zero();
    });
  });
}

inline VerificationReport suite_expansion(const SuiteRanges& r) {
  return detail::timed([&] {
    return exact_index_sweep("expansion", r.exact_max, true, 0, [](const BasisIndex& idx, const detail::ExactSetting& s) {
      return power_expansion_check(idx, s.pt, s.ctx).exactly_zero();
    });
  });
}

template <class Check>
VerificationReport weighted_sweep(const std::string& name, int max, Check&& check) {
  detail::Tally t(name, true);
  for (const auto& s : detail::exact_settings())
    for (int n = 0; n <= max; ++n)
      for (int m = 0; m <= max; ++m)
        for (int l = 0; l <= std::min(n, m); ++l) {
          auto describe = [&] {
            return "l=" + std::to_string(l) + " n=" + std::to_string(n) + " m=" + std::to_string(m) + " " +
                   detail::describe_point(s.pt, s.ctx);
          };
          try {
            t.exact_case(check(l, n, m, s).exactly_zero(), describe);
          } catch (const std::exception& e) {
            t.failed_case(e, describe);
          }
        }
  return t.report();
}

inline VerificationReport suite_weighted_sum(const SuiteRanges& r) {
  return detail::timed([&] {
    return weighted_sweep("weighted-sum", r.exact_max, [](int l, int n, int m, const detail::ExactSetting& s) {
      return weighted_sum_identity_check(l, n, m, s.pt, s.ctx);
    });
  });
}

inline VerificationReport suite_qstirling_sum(const SuiteRanges& r) {
  return detail::timed([&] {
    return weighted_sweep("qstirling-sum", r.exact_max, [](int l, int n, int m, const detail::ExactSetting& s) {
      return qstirling_weighted_sum_check(l, n, m, s.pt, s.ctx);
    });
  });
}

inline VerificationReport suite_bernoulli_stirling(const SuiteRanges& r) {
  return detail::timed([&] {
    detail::Tally t("bernoulli-stirling", true);
    const int K = r.bernoulli_k_max, N = r.bernoulli_n_max;
    for (const auto& s : detail::exact_settings()) {
      // Univariate decompositions per axis; the bivariate form is their product.
      std::vector<std::vector<Rational>> rx(K + 1, std::vector<Rational>(N + 1)), ry = rx;
      for (int k = 0; k <= K; ++k)
        for (int n = k; n <= N; ++n) {
          const auto cx = bernoulli_stirling_univariate_check(k, n, s.pt.px(), s.ctx);
          const auto cy = bernoulli_stirling_univariate_check(k, n, s.pt.py(), s.ctx);
          rx[k][n] = cx.rhs;
          ry[k][n] = cy.rhs;
          t.exact_case(cx.exactly_zero() && cy.exactly_zero(), [&] {
            return "univariate k=" + std::to_string(k) + " n=" + std::to_string(n) + " " +
                   detail::describe_point(s.pt, s.ctx);
          });
        }
      for (int n = 0; n <= N; ++n)
        for (int m = 0; m <= N; ++m)
          for (int k = 0; k <= std::min(n, K); ++k)
            for (int j = 0; j <= std::min(m, K); ++j) {
              const BasisIndex idx(k, j, n, m);
              t.exact_case(qbernstein2(idx, s.pt, s.ctx) == rx[k][n] * ry[j][m], [&] {
                return detail::describe_index(idx) + " " + detail::describe_point(s.pt, s.ctx);
              });
            }
    }
    return t.report();
  });
}

inline VerificationReport suite_qstirling_expansion(const SuiteRanges&) {
  return detail::timed([&] {
    detail::Tally t("qstirling-expansion", true);
    for (const Rational q : {Rational(1, 2), Rational(1, 3)}) {
      QContext<Rational> ctx(q);
      for (int n = 0; n <= 6; ++n) {
        for (int x = 0; x <= 6; ++x) {
          t.exact_case(monomial_expansion_check<Rational>(n, x, ctx).exactly_zero(), [&] {
            return "n=" + std::to_string(n) + " x=" + std::to_string(x) + " q=" + format_rational(q);
          });
        }
        // bivariate form: the product of the x and y expansions
        for (int x = 0; x <= 6; ++x)
          for (int y = 0; y <= 6; ++y) {
            const auto cx = monomial_expansion_check<Rational>(n, x, ctx);
            const auto cy = monomial_expansion_check<Rational>(n, y, ctx);
            t.exact_case(cx.lhs * cy.lhs == cx.rhs * cy.rhs, [&] {
              return "n=" + std::to_string(n) + " x=" + std::to_string(x) + " y=" + std::to_string(y) +
                     " q=" + format_rational(q);
            });
          }
      }
    }
    return t.report();
  });
}

inline VerificationReport suite_egf(const SuiteRanges& r) {
  return detail::timed([&] {
    detail::Tally t("egf", true);
    const std::size_t N = r.egf_order;
    for (const auto& s : detail::exact_settings())
      for (std::size_t k = 0; k <= N; ++k)
        for (std::size_t j = 0; j <= N; j += 3) {
          const auto fx = qbernstein_factor_egf(k, s.pt.px(), s.ctx, N);
          const auto fy = qbernstein_factor_egf(j, s.pt.py(), s.ctx, N);
          for (std::size_t n = 0; n <= N; ++n)
            for (std::size_t m = 0; m <= N; ++m) {
              const BasisIndex idx{int(k), int(j), int(n), int(m)};
              t.exact_case(fx[n] * fy[m] == qbernstein2(idx, s.pt, s.ctx), [&] {
                return detail::describe_index(idx) + " " + detail::describe_point(s.pt, s.ctx);
              });
            }
        }
    return t.report();
  });
}

inline VerificationReport suite_operator(const SuiteRanges& r) {
  return detail::timed([&] {
    detail::Tally t("operator", true);
    const OperandFunction<Rational> unit = [](const Rational&, const Rational&) { return Rational(1); };
    const OperandFunction<Rational> uv = [](const Rational& u, const Rational& v) { return u * v; };
    for (const auto& s : detail::exact_settings())
      for (int n = 1; n <= r.exact_max; ++n)
        for (int m = 1; m <= r.exact_max; ++m) {
          auto describe = [&](const char* f) {
            return std::string(f) + " n=" + std::to_string(n) + " m=" + std::to_string(m) + " " +
                   detail::describe_point(s.pt, s.ctx);
          };
          t.exact_case(qbernstein_operator(unit, n, m, s.pt, s.ctx) == qoperator_unit_closed_form(n, m, s.pt, s.ctx),
                       [&] { return describe("f=1"); });
          t.exact_case(qbernstein_operator(uv, n, m, s.pt, s.ctx) == qoperator_uv_closed_form(n, m, s.pt, s.ctx),
                       [&] { return describe("f=uv"); });
        }
    return t.report();
  });
}

// ---------------------------------------------------------------------------
// Float suites

inline VerificationReport suite_contour(const SuiteRanges& r) {
  return detail::timed([&] {
    detail::Tally t("contour", false, detail::tol_or(r, 1e-10));
    const std::pair<double, double> points[] = {{0.25, 0.6}, {0.5, 0.5}, {0.8, 0.15}};
    for (double q : detail::float_qs()) {
      QContext<double> ctx(q);
      for (auto [x, y] : points) {
        const EvalPoint2D<double> pt(make_qpoint(x, ctx), make_qpoint(y, ctx));
        for (int n = 0; n <= r.float_max; ++n)
          for (int m = 0; m <= r.float_max; ++m)
            for (int k = 0; k <= n; ++k)
              for (int j = 0; j <= m; ++j) {
                const BasisIndex idx(k, j, n, m);
                const auto v = contour_integral_eval(idx, pt, ctx, ContourSpec{1.0, 128});
                // an imaginary part above 1e-12 counts as a failure too
                const double imag_excess = std::abs(v.imag()) > 1e-12 ? std::abs(v.imag()) : 0.0;
                const double err = std::max(std::abs(v.real() - qbernstein2(idx, pt, ctx)), imag_excess);
                t.float_case(err, [&] { return detail::describe_index(idx) + " " + detail::describe_point(pt, ctx); });
              }
      }
    }
    return t.report();
  });
}

inline VerificationReport suite_derivative(const SuiteRanges& r) {
  return detail::timed([&] {
    detail::Tally t("derivative", false, detail::tol_or(r, 1e-5));
    const double h = 1e-5;
    const double coords[] = {0.2, 0.5, 0.8};
    for (double q : detail::float_qs()) {
      QContext<double> ctx(q);
      auto at = [&](double x, double y) { return EvalPoint2D<double>(make_qpoint(x, ctx), make_qpoint(y, ctx)); };
      for (double x : coords)
        for (double y : coords)
          for (int n = 0; n <= r.float_max; ++n)
            for (int m = 0; m <= r.float_max; ++m)
              for (int k = 0; k <= n; ++k)
                for (int j = 0; j <= m; ++j) {
                  const BasisIndex idx(k, j, n, m);
                  const double an = derivative_xy(idx, at(x, y), ctx);
                  const double fd = (qbernstein2(idx, at(x + h, y + h), ctx) - qbernstein2(idx, at(x + h, y - h), ctx) -
                                     qbernstein2(idx, at(x - h, y + h), ctx) + qbernstein2(idx, at(x - h, y - h), ctx)) /
                                    (4 * h * h);
                  const double err = std::abs(fd - an) / std::max(1.0, std::abs(an));
                  t.float_case(err, [&] { return detail::describe_index(idx) + " " + detail::describe_point(at(x, y), ctx); });
                }
    }
    return t.report();
  });
}

inline VerificationReport suite_mellin(const SuiteRanges& r) {
  return detail::timed([&] {
    const double tol = detail::tol_or(r, 1e-8);
    detail::Tally t("mellin", false, tol);
    QuadratureSpec quad;
    quad.abs_tol = std::min(quad.abs_tol, tol / 10.0);
    for (double q : {0.25, 1.0 / 6.0}) {
      QContext<double> ctx(q);
      for (double qx : {0.5, 1.0 / 3.0})
        for (double qy : {0.5, 1.0 / 3.0}) {
          const EvalPoint2D<double> pt(make_qpoint_from_power(qx, ctx), make_qpoint_from_power(qy, ctx));
          for (int k = 0; k <= 4; ++k)
            for (int j = 0; k + j <= 4; ++j)
              for (double s : {1.0, 2.0, 3.5}) {
                auto describe = [&] {
                  return "k=" + std::to_string(k) + " j=" + std::to_string(j) + " s=" + format_double(s) + " " +
                         detail::describe_point(pt, ctx);
                };
                try {
                  const auto rep = mellin_consistency_check(InterpParams{s, k, j, pt, 0}, ctx, quad);
                  t.float_case(rep.abs_difference, describe);
                } catch (const std::exception& e) {
                  t.failed_case(e, describe);
                }
              }
        }
    }
    return t.report();
  });
}

inline VerificationReport suite_interp_derivative(const SuiteRanges& r) {
  return detail::timed([&] {
    detail::Tally t("interp-derivative", false, detail::tol_or(r, 1e-6));
    const double h = 1e-4;
    for (double q : detail::float_qs()) {
      QContext<double> ctx(q);
      for (double x : {0.1, 0.5})
        for (double y : {0.3, 0.8})
          for (Complex s : {Complex(1.0, 0.0), Complex(2.0, 0.0), Complex(3.5, 1.0)}) {
            const EvalPoint2D<double> pt(make_qpoint(x, ctx), make_qpoint(y, ctx));
            auto classical = [&](Complex z, int m) { return interp_s_derivative(InterpParams{z, 1, 1, pt, m}); };
            auto qform = [&](Complex z, int m) { return interp_q_s_derivative(InterpParams{z, 1, 1, pt, m}, ctx); };
            for (int form = 0; form < 2; ++form) {
              auto f = [&](Complex z, int m) { return form == 0 ? classical(z, m) : qform(z, m); };
              for (int m = 1; m <= 3; ++m) {
                // central difference of the (m-1)th derivative, or of S itself for m = 2
                Complex fd;
                if (m == 2) fd = (f(s + h, 0) - 2.0 * f(s, 0) + f(s - h, 0)) / (h * h);
                else fd = (f(s + h, m - 1) - f(s - h, m - 1)) / (2.0 * h);
                const Complex an = f(s, m);
                const double err = std::abs(fd - an) / std::max(1.0, std::abs(an));
                t.float_case(err, [&] {
                  return std::string(form == 0 ? "classical" : "q-form") + " m=" + std::to_string(m) +
                         " s=" + format_double(s.real()) + "+" + format_double(s.imag()) + "i " +
                         detail::describe_point(pt, ctx);
                });
              }
            }
          }
    }
    return t.report();
  });
}

inline VerificationReport suite_classical_limit(const SuiteRanges& r) {
  return detail::timed([&] {
    detail::Tally t("classical-limit", false, detail::tol_or(r, 1e-5));
    QContext<double> ctx(1.0 - 1e-8);
    const double coords[] = {0.0, 0.25, 0.5, 0.9, 1.0};
    const OperandFunction<double> f = [](double u, double v) { return std::exp(u) * std::cos(v) + u * v; };
    for (double x : coords)
      for (double y : coords) {
        const EvalPoint2D<double> pt(make_qpoint(x, ctx), make_qpoint(y, ctx));
        auto where = [&] { return detail::describe_point(pt, ctx); };
        for (int n = 0; n <= r.float_max; ++n)
          for (int m = 0; m <= r.float_max; ++m) {
            for (int k = 0; k <= n; ++k)
              for (int j = 0; j <= m; ++j) {
                const BasisIndex idx(k, j, n, m);
                t.float_case(std::abs(qbernstein2(idx, pt, ctx) - bernstein2_classical(idx, x, y)),
                             [&] { return "basis " + detail::describe_index(idx) + " " + where(); });
              }
            if (n >= 1 && m >= 1) {
              t.float_case(std::abs(qbernstein_operator(f, n, m, pt, ctx) - bernstein_operator_classical(f, n, m, x, y)),
                           [&] { return "operator n=" + std::to_string(n) + " m=" + std::to_string(m) + " " + where(); });
            }
          }
        if (x < 1.0 && y < 1.0) {
          for (int k = 0; k <= 2; ++k)
            for (int j = 0; j <= 2; ++j)
              for (Complex s : {Complex(1.0, 0.0), Complex(2.0, 0.0), Complex(3.5, 0.0)}) {
                const InterpParams p{s, k, j, pt, 0};
                t.float_case(std::abs(interp_q(p, ctx) - interp_classical(p)), [&] {
                  return "interp k=" + std::to_string(k) + " j=" + std::to_string(j) + " s=" + format_double(s.real()) +
                         " " + where();
                });
              }
        }
      }
    for (int n = 0; n <= 6; ++n)
      for (int k = 0; k <= n; ++k) {
        const double exact = to_double(stirling2(n, k));
        t.float_case(std::abs(q_stirling2<double>(n, k, ctx) - exact) / std::max(1.0, exact),
                     [&] { return "q-stirling n=" + std::to_string(n) + " k=" + std::to_string(k); });
      }
    return t.report();
  });
}

// ---------------------------------------------------------------------------
// Registry

struct Suite {
  std::string name;
  std::function<VerificationReport(const SuiteRanges&)> run;
};

inline const std::vector<Suite>& suite_registry() {
  static const std::vector<Suite> suites{
      {"partition", suite_partition},
      {"recurrence", suite_recurrence},
      {"symmetry", suite_symmetry},
      {"elevation", suite_elevation},
      {"ratio", suite_ratio},
      {"expansion", suite_expansion},
      {"weighted-sum", suite_weighted_sum},
      {"qstirling-sum", suite_qstirling_sum},
      {"bernoulli-stirling", suite_bernoulli_stirling},
      {"qstirling-expansion", suite_qstirling_expansion},
      {"egf", suite_egf},
      {"operator", suite_operator},
      {"contour", suite_contour},
      {"derivative", suite_derivative},
      {"mellin", suite_mellin},
      {"interp-derivative", suite_interp_derivative},
      {"classical-limit", suite_classical_limit},
  };
  return suites;
}

inline const Suite* find_suite(const std::string& name) {
  for (const auto& s : suite_registry())
    if (s.name == name) return &s;
  return nullptr;
}

/// Runs the suites on up to `threads` workers. Results come back in the order
/// given, whatever the completion order.
inline std::vector<VerificationReport> run_suites(const std::vector<const Suite*>& suites, const SuiteRanges& ranges,
                                                  unsigned threads) {
  std::vector<VerificationReport> out(suites.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < suites.size(); i = next++) {
      try {
        out[i] = suites[i]->run(ranges);
      } catch (const std::exception& e) {
        out[i].suite = suites[i]->name;
        out[i].first_failure = std::string("suite aborted: ") + e.what();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(suites.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace qbern2d::cli
