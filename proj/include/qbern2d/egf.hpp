#pragma once

// Truncated exponential generating functions: sum_{n<=N} c_n t^n / n!.

#include <cstddef>
#include <span>
#include <vector>

#include "qbern2d/error.hpp"
#include "qbern2d/scalar.hpp"

namespace qbern2d {

namespace detail {

// Row n of Pascal's triangle as field elements.
template <Field T>
std::vector<T> pascal_row(std::size_t n) {
  std::vector<T> row(n + 1, T(0));
  BigInt c = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    row[k] = from_bigint<T>(c);
    c = c * BigInt(n - k) / BigInt(k + 1);
  }
  return row;
}

}  // namespace detail

template <Field T>
class TruncatedEGF {
 public:
  /// The zero series of order N.
  explicit TruncatedEGF(std::size_t order) : coeffs_(order + 1, T(0)) {}

  explicit TruncatedEGF(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DomainError("TruncatedEGF needs at least one coefficient");
  }

  static TruncatedEGF constant(const T& c, std::size_t order) {
    TruncatedEGF r(order);
    r.coeffs_[0] = c;
    return r;
  }

  /// The series of t^k / k!, i.e. a single unit coefficient at index k.
  static TruncatedEGF monomial(std::size_t k, std::size_t order) {
    TruncatedEGF r(order);
    if (k <= order) r.coeffs_[k] = T(1);
    return r;
  }

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const T& operator[](std::size_t n) const { return coeffs_.at(n); }
  std::span<const T> coefficients() const noexcept { return coeffs_; }

  TruncatedEGF& operator+=(const TruncatedEGF& o) {
    check_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  TruncatedEGF& operator-=(const TruncatedEGF& o) {
    check_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  TruncatedEGF& operator*=(const T& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend TruncatedEGF operator+(TruncatedEGF a, const TruncatedEGF& b) { return a += b; }
  friend TruncatedEGF operator-(TruncatedEGF a, const TruncatedEGF& b) { return a -= b; }
  friend TruncatedEGF operator*(TruncatedEGF a, const T& s) { return a *= s; }

  /// Binomial convolution: (fg)_n = sum_l C(n,l) f_l g_{n-l}.
  friend TruncatedEGF operator*(const TruncatedEGF& f, const TruncatedEGF& g) {
    f.check_order(g);
    const std::size_t N = f.order();
    TruncatedEGF r(N);
    for (std::size_t n = 0; n <= N; ++n) {
      auto row = detail::pascal_row<T>(n);
      T acc(0);
      for (std::size_t l = 0; l <= n; ++l) {
        if (is_zero(f.coeffs_[l]) || is_zero(g.coeffs_[n - l])) continue;
        acc += row[l] * f.coeffs_[l] * g.coeffs_[n - l];
      }
      r.coeffs_[n] = acc;
    }
    return r;
  }

  /// 1/f; requires a nonzero constant term.
  TruncatedEGF reciprocal() const {
    const std::size_t N = order();
    TruncatedEGF g(N);
    g.coeffs_[0] = checked_div(T(1), coeffs_[0], "TruncatedEGF::reciprocal");
    for (std::size_t n = 1; n <= N; ++n) {
      auto row = detail::pascal_row<T>(n);
      T acc(0);
      for (std::size_t l = 1; l <= n; ++l) acc += row[l] * coeffs_[l] * g.coeffs_[n - l];
      g.coeffs_[n] = -acc * g.coeffs_[0];
    }
    return g;
  }

  TruncatedEGF pow(std::size_t e) const {
    TruncatedEGF result = constant(T(1), order());
    TruncatedEGF base = *this;
    while (e > 0) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e > 0) base = base * base;
    }
    return result;
  }

  friend bool operator==(const TruncatedEGF&, const TruncatedEGF&) = default;

 private:
  void check_order(const TruncatedEGF& o) const {
    if (o.order() != order()) throw DomainError("TruncatedEGF order mismatch");
  }

  std::vector<T> coeffs_;
};

/// e^{a t}: coefficients a^n.
template <Field T>
TruncatedEGF<T> egf_exp(const T& a, std::size_t order) {
  std::vector<T> c(order + 1);
  T p(1);
  for (std::size_t n = 0; n <= order; ++n) {
    c[n] = p;
    p *= a;
  }
  return TruncatedEGF<T>(std::move(c));
}

}  // namespace qbern2d
