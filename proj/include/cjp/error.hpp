#pragma once

#include <stdexcept>
#include <string>

namespace cjp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the input was violated (bad parameters, malformed diagram).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An exact-arithmetic invariant failed, e.g. a division that should be exact left a remainder.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// The request lies outside the regime where the degree theorems apply.
class RegimeError : public Error {
 public:
  using Error::Error;
};

}  // namespace cjp
