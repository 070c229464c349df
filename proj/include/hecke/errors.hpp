#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands built for different d.
class SizeMismatchError : public Error {
 public:
  using Error::Error;
};

// Request exceeds a configured enumeration or table cap.
class ResourceBoundError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A property the construction guarantees did not hold. Always a bug.
class InternalInvariantError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// Truncated Laurent arithmetic ran out of known digits.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

// Scalars from rings with different (p, f, r).
class ParameterMismatchError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace hecke
