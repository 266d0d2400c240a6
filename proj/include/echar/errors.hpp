#pragma once

#include <stdexcept>
#include <string>

namespace echar {

// All library failures derive from Error so callers can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Operand shapes do not match (vector length vs. tensor dimension, etc.).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Valid input that is outside what the library computes (size caps, n != 2 for
// the binary-form routes, ...).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// Mathematical precondition violated: non-orthogonal matrix, degree-0 form,
// zero polynomial passed to the root finder, ...
class DomainError : public Error {
 public:
  using Error::Error;
};

class IrregularTensorError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace echar
