#pragma once

#include <stdexcept>

namespace monocurve {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// deg/udeg/gap queries are undefined for the zero polynomial.
class ZeroPolynomialError : public Error {
 public:
  using Error::Error;
};

/// An exponent computation (m * deg, deg + shift, ...) would wrap around.
class ExponentOverflowError : public Error {
 public:
  using Error::Error;
};

class BadAlphaError : public Error {
 public:
  using Error::Error;
};

class OutOfRangeError : public Error {
 public:
  using Error::Error;
};

/// Generator sets must contain 0, 1, alpha-1 and alpha.
class NotSmoothError : public Error {
 public:
  using Error::Error;
};

/// A proved relation between computed quantities failed; indicates a bug.
class InternalInconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace monocurve
