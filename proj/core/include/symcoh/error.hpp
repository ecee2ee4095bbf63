#pragma once

#include <stdexcept>
#include <string>

namespace symcoh {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different generator sets (or torus dimensions).
class ContextError : public Error {
 public:
  using Error::Error;
};

/// An operation that needs a homogeneous form of a given degree got something else.
class DegreeError : public Error {
 public:
  using Error::Error;
};

/// Input outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A model or cohomology datum violates one of its structural invariants.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// A name (model, algebra, identity, suite) that is not registered.
class UnknownNameError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (model files, rationals, trig expressions).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace symcoh
