#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jl {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

/// A size limit (order, element or degree cap) prevents a certified answer.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class Timeout : public Error {
 public:
  using Error::Error;
};

class NotAHomomorphism : public Error {
 public:
  using Error::Error;
};

class InvalidAction : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(message + " at byte " + std::to_string(offset)), message_(message), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t offset_;
};

class SchemaError : public Error {
 public:
  SchemaError(const std::string& message, std::string pointer)
      : Error("schema violation at " + (pointer.empty() ? std::string("/") : pointer) + ": " +
              message),
        pointer_(std::move(pointer)) {}
  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

class BuildError : public Error {
 public:
  using Error::Error;
};

}  // namespace jl
