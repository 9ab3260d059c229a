#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of an operation (non-finite, wrong sign, out of range).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation at a pole of a special function, e.g. zeta(1) or Gamma(-2).
class PoleError : public Error {
 public:
  using Error::Error;
};

/// A regularized density evaluated where it is singular (the plates / interval ends).
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// A request whose answer is known to be infinite; raised instead of attempting it.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

/// Input that violates an operation's stated precondition (sample counts, grid sizes).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace casimir
