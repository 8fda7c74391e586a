#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arbnet {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller broke an operation's precondition (bad vertex, wrong root count, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NotCograph : public Error {
 public:
  using Error::Error;
};

// Raised by input parsers; line is 1-based, 0 when the error is not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Internal consistency guard (e.g. a non-unique lca in an arboreal network).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace arbnet
