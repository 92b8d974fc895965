#pragma once

#include <stdexcept>
#include <string>

namespace snoise {

// Base class for library failures. CLI maps subclasses to exit codes:
// ConfigError -> 2, DivergenceError -> 4, everything else derived from
// Error -> 3.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed configuration, bad parameters, or a request for an operation a
// law/model does not support.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Operation requested on a law that lacks it (e.g. Laplace transform of a
// law with no finite transform, density of a point mass).
class UnsupportedError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

// The requested limit object provably fails to exist (divergent series /
// nonconvergent measure).
class DivergenceError : public Error {
 public:
  using Error::Error;
};

// Numerical machinery failed to meet its accuracy contract.
class NumericError : public Error {
 public:
  using Error::Error;
};

class QuadratureError : public NumericError {
 public:
  using NumericError::NumericError;
};

// A function that was promised to be a Laplace transform is not one.
class NotValidLtError : public NumericError {
 public:
  using NumericError::NumericError;
};

// Integrand singular where the calculus requires a vanishing limit.
class SingularIntegrandError : public NumericError {
 public:
  using NumericError::NumericError;
};

// Too little data to run an estimator at its stated operating point.
class InsufficientDataError : public NumericError {
 public:
  using NumericError::NumericError;
};

// A truncation horizon satisfying the tolerance could not be found.
class TruncationError : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace snoise
