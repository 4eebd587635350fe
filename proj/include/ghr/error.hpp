#pragma once

#include <stdexcept>
#include <string>

namespace ghr {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed tables or files: wrong shape, out-of-range index, unknown label.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A configured size cap was exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace ghr
