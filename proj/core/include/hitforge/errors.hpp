#pragma once

#include <stdexcept>
#include <string>

namespace hitforge {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation hit a configured size or iteration limit.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// Polynomial text did not match the grammar; `position` is a byte offset.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

/// Input rejected at ingest (bad cover, bad base point, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Certificate JSON did not match the schema; `pointer` is an RFC 6901 JSON
/// pointer to the offending value ("" for the document itself).
class SchemaError : public Error {
 public:
  SchemaError(const std::string& pointer, const std::string& what)
      : Error((pointer.empty() ? std::string("/") : pointer) + ": " + what), pointer_(pointer) {}
  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

class UnsupportedVersion : public SchemaError {
 public:
  using SchemaError::SchemaError;
};

/// Inputs supplied at verification time hash differently from the ones the
/// certificate was issued for.
class DigestMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace hitforge
