#pragma once

#include <stdexcept>
#include <string>

namespace ffcs {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad user input: the request itself is malformed.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class UnsupportedOrder : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class InvalidGamma : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class InvalidParameter : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class DimensionMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Brute-force enumeration would exceed its configured candidate budget.
class EnumerationCapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace ffcs
