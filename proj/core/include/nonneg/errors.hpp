#pragma once

#include <stdexcept>
#include <string>

namespace nonneg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tensor or matrix construction rejected its input.
class InvalidTensor : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// An operation that requires a weakly irreducible tensor received one whose
/// representation matrix is reducible.
class NotWeaklyIrreducible : public Error {
 public:
  using Error::Error;
};

/// The power step produced the zero vector (input tensor has a zero row).
class ZeroIterate : public Error {
 public:
  using Error::Error;
};

/// Exact primitivity decision exceeded its support-state budget.
class PrimitivityUndecided : public Error {
 public:
  using Error::Error;
};

/// A brute-force oracle was asked to work beyond its size guard.
class OracleGuardExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace nonneg
