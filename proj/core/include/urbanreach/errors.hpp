#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace urbanreach {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input data breaks a documented invariant (bad ring, missing attribute, ...).
class ValidationError : public Error {
public:
  using Error::Error;
};

// A call argument is out of its documented range.
class ParameterError : public Error {
public:
  using Error::Error;
};

// A caller violated an operation precondition.
class PreconditionError : public Error {
public:
  using Error::Error;
};

// A standard of the wrong kind was passed (e.g. per-capita where a
// distance standard is required).
class WrongKindError : public ParameterError {
public:
  using ParameterError::ParameterError;
};

// Too few or degenerate inputs for a geometric construction.
class DegenerateInputError : public ParameterError {
public:
  using ParameterError::ParameterError;
};

// Filesystem-level failure: missing file, unwritable path.
class IoError : public Error {
public:
  using Error::Error;
};

// Malformed file content; carries the byte offset of the failure.
class ParseError : public ValidationError {
public:
  ParseError(const std::string& what, std::size_t byte_offset)
      : ValidationError(what), byte_offset_(byte_offset) {}
  std::size_t byte_offset() const { return byte_offset_; }

private:
  std::size_t byte_offset_ = 0;
};

// A layer file holds a different geometry kind than requested.
class KindMismatchError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

// Bad command line (conflicting or missing flags).
class UsageError : public Error {
public:
  using Error::Error;
};

}  // namespace urbanreach
