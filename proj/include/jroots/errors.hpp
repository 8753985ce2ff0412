#pragma once

#include <stdexcept>
#include <string>

namespace jroots {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coordinates whose sum is not divisible by k.
class LatticeError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Invalid system parameters or mismatched systems.
class ParamError : public Error {
 public:
  using Error::Error;
};

/// Exact 64-bit arithmetic left its range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// An operation that needs a finite-type (positive definite) system got
/// an affine or indefinite one.
class NotFiniteTypeError : public Error {
 public:
  using Error::Error;
};

/// A search exceeded its configured state or time budget.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace jroots
