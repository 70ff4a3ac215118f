#pragma once

#include <stdexcept>
#include <string>

namespace qbern2d {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (q outside (0,1),
/// a coordinate outside [0,1], a pole of the interpolation function, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Exact or floating division by zero. Never silently turned into NaN.
class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// An exact and a floating scalar met in one expression.
class MixedKindError : public Error {
 public:
  using Error::Error;
};

/// A caller supplied fewer sample values than the operation needs.
class InsufficientData : public Error {
 public:
  using Error::Error;
};

/// Numerical quadrature could not reach the requested tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace qbern2d
