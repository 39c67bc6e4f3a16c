#pragma once

#include <stdexcept>
#include <string>

namespace qr {

/// Base class for all library errors. Subclasses split into validation
/// failures (bad inputs) and I/O failures so callers can map them to
/// distinct exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class NotPositiveDefinite : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class DimensionMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class DimensionTooSmall : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class BadBounds : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NonPositiveT : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NonNegativeFbar : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class OracleDimensionLimit : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

}  // namespace qr
