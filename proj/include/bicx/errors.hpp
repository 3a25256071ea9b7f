#pragma once

#include <stdexcept>
#include <string>

namespace bicx {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A zero divisor was passed where an invertible value is required.
class NullConeError : public Error {
 public:
  using Error::Error;
};

/// An idempotent component lies on the negative real axis of the principal sqrt.
class BranchCutError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// An integrand produced inf or NaN at a quadrature node.
class NonFiniteError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A fractional Fourier parameter outside the admissible set.
class ExcludedParameterError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed input document or command-line configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace bicx
