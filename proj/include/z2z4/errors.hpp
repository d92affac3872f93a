#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace z2z4 {

/* Base of every error raised by the library. */
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/* Malformed vector literal or code file. line() is 1-based, 0 when unknown. */
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/* An operation was called outside its domain (shape mismatch, wrong class, ...). */
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/* An enumeration would exceed the configured ambient-size guard. */
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace z2z4
