#pragma once

#include <stdexcept>
#include <string>

namespace powerspectra {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Element index outside [0, order).
class InvalidElementError : public Error {
 public:
  using Error::Error;
};

/// Arguments outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Input matrix does not have the structure of a power graph.
class StructureError : public Error {
 public:
  using Error::Error;
};

/// Iterative method failed to converge.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Statistics requested over an empty vertex subset.
class DegenerateSubsetError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation was violated.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace powerspectra
