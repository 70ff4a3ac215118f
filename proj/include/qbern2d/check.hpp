#pragma once

#include "qbern2d/scalar.hpp"

namespace qbern2d {

/// Both sides of an identity evaluated independently, and their difference.
template <Field T>
struct IdentityCheck {
  T lhs;
  T rhs;
  T difference;

  bool exactly_zero() const { return is_zero(difference); }
  T abs_error() const { return abs_value(difference); }
};

template <Field T>
IdentityCheck<T> make_check(T lhs, T rhs) {
  T diff = lhs - rhs;
  return {std::move(lhs), std::move(rhs), std::move(diff)};
}

}  // namespace qbern2d
