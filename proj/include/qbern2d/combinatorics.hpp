#pragma once

// Binomials, forward and q-difference operators, second-kind Stirling numbers
// (classical and q-analog) and higher-order Bernoulli polynomials.

#include <cstddef>
#include <span>
#include <vector>

#include "qbern2d/check.hpp"
#include "qbern2d/egf.hpp"
#include "qbern2d/error.hpp"
#include "qbern2d/scalar.hpp"

namespace qbern2d {

/// C(n,k) for n >= 0; zero outside 0 <= k <= n.
inline BigInt binomial_int(long long n, long long k) {
  if (n < 0) throw DomainError("binomial: negative n");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

template <Field T = Rational>
T binomial(long long n, long long k) {
  return from_bigint<T>(binomial_int(n, k));
}

/// Delta^n f(0) = sum_k C(n,k) (-1)^(n-k) f(k), from samples f(0..n).
template <Field T>
T forward_difference_at_zero(std::span<const T> values, std::size_t n) {
  if (values.size() < n + 1) throw InsufficientData("forward_difference_at_zero needs f(0..n)");
  T acc(0);
  for (std::size_t k = 0; k <= n; ++k) {
    T term = binomial<T>(n, k) * values[k];
    if ((n - k) % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

/// S(n,k) = Delta^k 0^n / k!.
inline BigInt stirling2_int(long long n, long long k) {
  if (n < 0 || k < 0) throw DomainError("stirling2: negative argument");
  if (k > n) return 0;
  BigInt acc = 0;
  for (long long l = 0; l <= k; ++l) {
    BigInt term = binomial_int(k, l) * boost::multiprecision::pow(BigInt(l), static_cast<unsigned>(n));
    if ((k - l) % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  BigInt fact = 1;
  for (long long i = 2; i <= k; ++i) fact *= i;
  return acc / fact;
}

template <Field T = Rational>
T stirling2(long long n, long long k) {
  return from_bigint<T>(stirling2_int(n, k));
}

/// Write-once table of S(n,k) for 0 <= n <= max_n, 0 <= k <= max_k.
class StirlingTable {
 public:
  StirlingTable(std::size_t max_n, std::size_t max_k) : max_n_(max_n), max_k_(max_k) {
    entries_.reserve((max_n + 1) * (max_k + 1));
    for (std::size_t n = 0; n <= max_n; ++n) {
      for (std::size_t k = 0; k <= max_k; ++k) entries_.push_back(stirling2<Rational>(n, k));
    }
  }

  std::size_t max_n() const noexcept { return max_n_; }
  std::size_t max_k() const noexcept { return max_k_; }

  const Rational& at(std::size_t n, std::size_t k) const {
    if (n > max_n_ || k > max_k_) throw DomainError("StirlingTable: index out of range");
    return entries_[n * (max_k_ + 1) + k];
  }

 private:
  std::size_t max_n_;
  std::size_t max_k_;
  std::vector<Rational> entries_;
};

/// Delta_q^n f(0) with Delta_q^n = prod_{j<n} (E - q^j I), applied factor by
/// factor to the samples f(0..n).
template <Field T>
T q_difference_at_zero(std::span<const T> values, std::size_t n, const QContext<T>& ctx) {
  if (values.size() < n + 1) throw InsufficientData("q_difference_at_zero needs f(0..n)");
  std::vector<T> work(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(n + 1));
  T qj(1);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i + 1 < work.size(); ++i) work[i] = work[i + 1] - qj * work[i];
    work.pop_back();
    qj *= ctx.q();
  }
  return work.front();
}

/// Closed form sum_k [n k]_q (-1)^k q^C(k,2) f(n-k). The exponent depends on
/// the summation index; this agrees with the operator product above.
template <Field T>
T q_difference_closed_form(std::span<const T> values, std::size_t n, const QContext<T>& ctx) {
  if (values.size() < n + 1) throw InsufficientData("q_difference_closed_form needs f(0..n)");
  T acc(0);
  for (std::size_t k = 0; k <= n; ++k) {
    const long long kk = static_cast<long long>(k);
    T term = gaussian_binomial<T>(static_cast<long long>(n), kk, ctx) * ctx.power(kk * (kk - 1) / 2) * values[n - k];
    if (k % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

/// S(n,k;q) = q^(-C(k,2)) / [k]_q! * sum_j (-1)^j q^C(j,2) [k j]_q [k-j]_q^n.
template <Field T>
T q_stirling2(long long n, long long k, const QContext<T>& ctx) {
  if (n < 0 || k < 0) throw DomainError("q_stirling2: negative argument");
  T acc(0);
  for (long long j = 0; j <= k; ++j) {
    T term = ctx.power(j * (j - 1) / 2) * gaussian_binomial<T>(k, j, ctx) * ipow(q_integer<T>(k - j, ctx), n);
    if (j % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc * ctx.power(-(k * (k - 1) / 2)) / q_factorial<T>(k, ctx);
}

/// EGF of (t/(e^t-1))^k e^{xt}, truncated at order N. Coefficient n is B_n^(k)(x).
template <Field T>
TruncatedEGF<T> bernoulli_higher_egf(std::size_t k, const T& x, std::size_t order) {
  // (e^t - 1)/t has EGF coefficients n!/(n+1)! = 1/(n+1).
  std::vector<T> c(order + 1);
  for (std::size_t n = 0; n <= order; ++n) c[n] = checked_div(T(1), T(n + 1));
  TruncatedEGF<T> bernoulli_kernel = TruncatedEGF<T>(std::move(c)).reciprocal();
  return bernoulli_kernel.pow(k) * egf_exp(x, order);
}

/// B_n^(k)(x), the degree-n Bernoulli polynomial of order k.
template <Field T>
T bernoulli_higher_at(std::size_t n, std::size_t k, const T& x) {
  return bernoulli_higher_egf(k, x, n)[n];
}

namespace detail {

template <Field T>
T newton_q_expansion(long long n, const QContext<T>& ctx, auto&& gaussian_of_k) {
  T acc(0);
  for (long long k = 0; k <= n; ++k) {
    acc += ctx.power(k * (k - 1) / 2) * gaussian_of_k(k) * q_factorial<T>(k, ctx) * q_stirling2<T>(n, k, ctx);
  }
  return acc;
}

}  // namespace detail

/// [x]_q^n against sum_k q^C(k,2) [x k]_q [k]_q! S(n,k;q) at an integer x.
template <Field T>
IdentityCheck<T> monomial_expansion_check(long long n, long long x, const QContext<T>& ctx) {
  if (n < 0) throw DomainError("monomial_expansion_check: negative degree");
  T lhs = ipow(q_integer<T>(x, ctx), n);
  T rhs = detail::newton_q_expansion<T>(n, ctx, [&](long long k) { return gaussian_binomial<T>(x, k, ctx); });
  return make_check(std::move(lhs), std::move(rhs));
}

/// Same identity at a real point; both sides are polynomials in q^x.
template <Field T>
IdentityCheck<T> monomial_expansion_check(long long n, const QPoint<T>& p, const QContext<T>& ctx) {
  if (n < 0) throw DomainError("monomial_expansion_check: negative degree");
  T lhs = ipow(q_integer(p, ctx), n);
  T rhs = detail::newton_q_expansion<T>(n, ctx, [&](long long k) { return gaussian_binomial<T>(p, k, ctx); });
  return make_check(std::move(lhs), std::move(rhs));
}

}  // namespace qbern2d
