#pragma once

// Numeric tower (exact rationals and binary floating point) and elementary
// q-arithmetic: q-integers, q-factorials and Gaussian binomial coefficients.
//
// Every algorithm in the library is a template over a field type `T` that is
// either `Rational` (exact, arbitrary precision) or a floating-point type.
// Because the field is a template parameter, mixing an exact and a floating
// value inside one computation does not compile. The run-time `Scalar` type
// below is used where the kind is only known at run time (CLI, tables) and
// rejects mixed-kind arithmetic with `MixedKindError`.

#include <charconv>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <system_error>
#include <type_traits>
#include <utility>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

#include "qbern2d/error.hpp"

namespace qbern2d {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

template <class T>
concept Field = std::same_as<T, Rational> || std::floating_point<T>;

template <class T>
inline constexpr bool is_exact_v = std::same_as<T, Rational>;

enum class Mode { exact, floating };

template <Field T>
inline constexpr Mode mode_of_v = is_exact_v<T> ? Mode::exact : Mode::floating;

inline std::string_view to_string(Mode m) { return m == Mode::exact ? "exact" : "float"; }

// ---------------------------------------------------------------------------
// Field helpers

template <Field T>
T from_bigint(const BigInt& v) {
  if constexpr (is_exact_v<T>) {
    return Rational(v);
  } else {
    return v.template convert_to<T>();
  }
}

template <Field T>
T from_ratio(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DivisionByZero("from_ratio: zero denominator");
  if constexpr (is_exact_v<T>) {
    return den < 0 ? Rational(BigInt(num) * -1, BigInt(den) * -1) : Rational(num, den);
  } else {
    return static_cast<T>(num) / static_cast<T>(den);
  }
}

template <Field T>
double to_double(const T& v) {
  if constexpr (is_exact_v<T>) {
    return v.template convert_to<double>();
  } else {
    return static_cast<double>(v);
  }
}

template <Field T>
bool is_zero(const T& v) {
  return v == T(0);
}

/// a / b, raising DivisionByZero instead of producing inf or NaN.
template <Field T>
T checked_div(const T& a, const T& b, std::string_view what = "division") {
  if (is_zero(b)) throw DivisionByZero(std::string(what) + ": division by zero");
  return a / b;
}

/// Integer power by repeated squaring. Negative exponents invert the base.
template <Field T>
T ipow(T base, long long e) {
  if (e < 0) {
    base = checked_div(T(1), base, "ipow");
    e = -e;
  }
  T result(1);
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

template <Field T>
T abs_value(const T& v) {
  return v < T(0) ? T(-v) : v;
}

// ---------------------------------------------------------------------------
// Serialization

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Lowest-terms "p/q"; integers print without a denominator.
inline std::string format_rational(const Rational& r) {
  return r.str();
}

/// Shortest decimal string that round-trips to the same double. Integral
/// values get a trailing ".0" so they read back as floats.
inline std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) throw Error("format_double: conversion failed");
  std::string out(buf, end);
  if (out.find_first_of(".eEin") == std::string::npos) out += ".0";
  return out;
}

inline BigInt parse_bigint(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw ParseError("empty integer in '" + std::string(text) + "'");
  for (char c : digits) {
    if (c < '0' || c > '9') throw ParseError("malformed integer '" + std::string(text) + "'");
  }
  BigInt v{std::string(digits)};
  return (!text.empty() && text.front() == '-') ? BigInt(-v) : v;
}

/// Parses "p/q" or a bare integer "p" as an exact rational.
inline Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  BigInt num = parse_bigint(text.substr(0, slash));
  BigInt den = parse_bigint(text.substr(slash + 1));
  if (den == 0) throw DivisionByZero("parse_rational: zero denominator in '" + std::string(text) + "'");
  // the two-argument constructor rejects negative denominators
  if (den < 0) return Rational(BigInt(-num), BigInt(-den));
  return Rational(num, den);
}

inline double parse_double(std::string_view text) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError("malformed decimal '" + std::string(text) + "'");
  }
  return v;
}

/// True when the literal is written as a decimal (forces floating mode).
inline bool looks_decimal(std::string_view text) {
  return text.find_first_of(".eEin") != std::string_view::npos && text.find('/') == std::string_view::npos;
}

// ---------------------------------------------------------------------------
// Run-time scalar

class Scalar {
 public:
  enum class Kind { exact, floating };

  Scalar() : value_(Rational(0)) {}
  Scalar(Rational v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(double v) : value_(v) {}               // NOLINT(google-explicit-constructor)

  /// "p/q" or "p" gives an exact scalar; a decimal literal gives a float.
  static Scalar parse(std::string_view text) {
    if (looks_decimal(text)) return Scalar(parse_double(text));
    return Scalar(parse_rational(text));
  }

  Kind kind() const noexcept { return value_.index() == 0 ? Kind::exact : Kind::floating; }
  bool is_exact() const noexcept { return kind() == Kind::exact; }

  const Rational& exact() const {
    if (!is_exact()) throw MixedKindError("Scalar::exact on a floating scalar");
    return std::get<Rational>(value_);
  }
  double floating() const {
    if (is_exact()) throw MixedKindError("Scalar::floating on an exact scalar");
    return std::get<double>(value_);
  }

  double to_double() const {
    return is_exact() ? qbern2d::to_double(std::get<Rational>(value_)) : std::get<double>(value_);
  }

  std::string to_string() const {
    return is_exact() ? format_rational(std::get<Rational>(value_)) : format_double(std::get<double>(value_));
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) { return combine(a, b, [](auto x, auto y) { return x + y; }); }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return combine(a, b, [](auto x, auto y) { return x - y; }); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) { return combine(a, b, [](auto x, auto y) { return x * y; }); }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    return combine(a, b, [](auto x, auto y) { return checked_div(x, y, "Scalar"); });
  }
  Scalar operator-() const {
    return std::visit(
        [](const auto& v) {
          using V = std::decay_t<decltype(v)>;
          return Scalar(V(-v));
        },
        value_);
  }

  /// Values of different kinds never compare equal.
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

 private:
  template <class Op>
  static Scalar combine(const Scalar& a, const Scalar& b, Op op) {
    if (a.kind() != b.kind()) throw MixedKindError("mixing exact and floating scalars");
    if (a.is_exact()) return Scalar(Rational(op(std::get<Rational>(a.value_), std::get<Rational>(b.value_))));
    return Scalar(double(op(std::get<double>(a.value_), std::get<double>(b.value_))));
  }

  std::variant<Rational, double> value_;
};

template <Field T>
Scalar to_scalar(const T& v) {
  if constexpr (is_exact_v<T>) {
    return Scalar(v);
  } else {
    return Scalar(static_cast<double>(v));
  }
}

// ---------------------------------------------------------------------------
// Deformation parameter

template <Field T>
class QContext {
 public:
  explicit QContext(T q) : q_(std::move(q)) {
    if (!(q_ > T(0) && q_ < T(1))) throw DomainError("q must lie in the open interval (0,1)");
    one_minus_q_ = T(1) - q_;
    if constexpr (!is_exact_v<T>) ln_q_ = std::log1p(-one_minus_q_);
  }

  static constexpr Mode mode = mode_of_v<T>;

  const T& q() const noexcept { return q_; }
  const T& one_minus_q() const noexcept { return one_minus_q_; }

  /// ln q; only floating contexts carry it.
  T ln_q() const
    requires(!is_exact_v<T>)
  {
    return ln_q_;
  }

  /// q^e for an integer exponent.
  T power(long long e) const { return ipow(q_, e); }

 private:
  T q_;
  T one_minus_q_;
  [[no_unique_address]] std::conditional_t<is_exact_v<T>, std::monostate, T> ln_q_{};
};

// ---------------------------------------------------------------------------
// Evaluation point

/// A coordinate x in [0,1] with q^x and q^(1-x). Exact points are built from
/// q^x directly, so x itself is usually unavailable.
template <Field T>
class QPoint {
 public:
  const std::optional<T>& x() const noexcept { return x_; }
  const T& qx() const noexcept { return qx_; }
  const T& q1mx() const noexcept { return q1mx_; }
  /// The q this point was built for.
  const T& q() const noexcept { return q_; }

  /// The point 1 - x: q^x and q^(1-x) swap roles.
  QPoint reflected() const {
    QPoint r;
    r.q_ = q_;
    r.qx_ = q1mx_;
    r.q1mx_ = qx_;
    if (x_) r.x_ = T(1) - *x_;
    return r;
  }

  /// x as a double, recovering it from q^x if needed.
  double x_as_double() const {
    if (x_) return to_double(*x_);
    return std::log(to_double(qx_)) / std::log(to_double(q_));
  }

  template <Field U>
  friend QPoint<U> make_qpoint_exact(const U& qx, const QContext<U>& ctx);
  template <Field U>
  friend QPoint<U> make_qpoint(const U& x, const QContext<U>& ctx);
  template <Field U>
  friend QPoint<U> make_qpoint_from_power(const U& qx, const QContext<U>& ctx);

 private:
  QPoint() = default;

  std::optional<T> x_;
  T qx_{1};
  T q1mx_{1};
  T q_{1};
};

template <Field T>
void require_same_q(const QPoint<T>& p, const QContext<T>& ctx) {
  if (p.q() != ctx.q()) throw DomainError("point was built for a different q");
}

/// Exact point from a rational q^x in [q, 1]. The coordinate is recorded only
/// at the endpoints (q^x = 1 gives x = 0, q^x = q gives x = 1).
template <Field T>
QPoint<T> make_qpoint_exact(const T& qx, const QContext<T>& ctx) {
  static_assert(is_exact_v<T>, "make_qpoint_exact needs an exact context");
  if (qx < ctx.q() || qx > T(1)) throw DomainError("q^x must lie in [q, 1]");
  QPoint<T> p;
  p.q_ = ctx.q();
  p.qx_ = qx;
  p.q1mx_ = ctx.q() / qx;
  if (qx == T(1)) p.x_ = T(0);
  if (qx == ctx.q()) p.x_ = T(1);
  return p;
}

/// Point from the coordinate x in [0,1] (floating contexts).
template <Field T>
QPoint<T> make_qpoint(const T& x, const QContext<T>& ctx) {
  static_assert(!is_exact_v<T>, "exact points are built from q^x; use make_qpoint_exact");
  if (!(x >= T(0) && x <= T(1))) throw DomainError("coordinate must lie in [0,1]");
  QPoint<T> p;
  p.q_ = ctx.q();
  p.x_ = x;
  p.qx_ = x == T(0) ? T(1) : (x == T(1) ? ctx.q() : std::exp(x * ctx.ln_q()));
  p.q1mx_ = x == T(1) ? T(1) : (x == T(0) ? ctx.q() : std::exp((T(1) - x) * ctx.ln_q()));
  return p;
}

/// Floating point from q^x; x is recovered as log(q^x)/log(q).
template <Field T>
QPoint<T> make_qpoint_from_power(const T& qx, const QContext<T>& ctx) {
  if constexpr (is_exact_v<T>) {
    return make_qpoint_exact(qx, ctx);
  } else {
    if (!(qx >= ctx.q() && qx <= T(1))) throw DomainError("q^x must lie in [q, 1]");
    return make_qpoint(std::log(qx) / ctx.ln_q(), ctx);
  }
}

// ---------------------------------------------------------------------------
// q-integers

namespace detail {

// (1 - q^a) / (1 - q). For floating contexts with a known exponent use expm1,
// which keeps full relative accuracy as q -> 1.
template <Field T>
T q_bracket(const std::optional<T>& exponent, const T& power, const QContext<T>& ctx) {
  if constexpr (!is_exact_v<T>) {
    if (exponent) return -std::expm1(*exponent * ctx.ln_q()) / ctx.one_minus_q();
  }
  return (T(1) - power) / ctx.one_minus_q();
}

}  // namespace detail

/// [x]_q = (1 - q^x)/(1 - q).
template <Field T>
T q_integer(const QPoint<T>& p, const QContext<T>& ctx) {
  require_same_q(p, ctx);
  return detail::q_bracket(p.x(), p.qx(), ctx);
}

/// [1-x]_q = (1 - q^(1-x))/(1 - q).
template <Field T>
T q_integer_complement(const QPoint<T>& p, const QContext<T>& ctx) {
  require_same_q(p, ctx);
  std::optional<T> e;
  if (p.x()) e = T(1) - *p.x();
  return detail::q_bracket(e, p.q1mx(), ctx);
}

/// [n]_q for any integer n.
template <Field T>
T q_integer(long long n, const QContext<T>& ctx) {
  if constexpr (is_exact_v<T>) {
    if (n >= 0) {
      // 1 + q + ... + q^(n-1)
      T sum(0), term(1);
      for (long long i = 0; i < n; ++i) {
        sum += term;
        term *= ctx.q();
      }
      return sum;
    }
    return (T(1) - ctx.power(n)) / ctx.one_minus_q();
  } else {
    return -std::expm1(static_cast<T>(n) * ctx.ln_q()) / ctx.one_minus_q();
  }
}

/// [k]_q! = [k]_q [k-1]_q ... [1]_q; the empty product is 1.
template <Field T>
T q_factorial(long long k, const QContext<T>& ctx) {
  if (k < 0) throw DomainError("q_factorial: negative argument");
  T r(1);
  for (long long i = 2; i <= k; ++i) r *= q_integer<T>(i, ctx);
  return r;
}

/// Gaussian binomial [n choose k]_q at an integer first argument.
template <Field T>
T gaussian_binomial(long long n, long long k, const QContext<T>& ctx) {
  if (k < 0) return T(0);
  if (k == 0) return T(1);
  if (n >= 0 && k > n) return T(0);
  T num(1);
  for (long long i = 0; i < k; ++i) num *= q_integer<T>(n - i, ctx);
  return num / q_factorial<T>(k, ctx);
}

/// Gaussian binomial [x choose k]_q = [x]_q [x-1]_q ... [x-k+1]_q / [k]_q! at a
/// real point, using [x-i]_q = (1 - q^x q^(-i))/(1 - q).
template <Field T>
T gaussian_binomial(const QPoint<T>& p, long long k, const QContext<T>& ctx) {
  require_same_q(p, ctx);
  if (k < 0) return T(0);
  T num(1);
  for (long long i = 0; i < k; ++i) {
    std::optional<T> e;
    if (p.x()) e = *p.x() - T(i);
    num *= detail::q_bracket(e, T(p.qx() * ctx.power(-i)), ctx);
  }
  return num / q_factorial<T>(k, ctx);
}

}  // namespace qbern2d
