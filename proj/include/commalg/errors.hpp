#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace commalg {

// Raised for bad user input: malformed DSL, unknown vertices, zero weights,
// invalid configuration. Maps to CLI exit status 1.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public ValidationError {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : ValidationError("line " + std::to_string(line) + ", column " +
                        std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// The oracle refused to enumerate more paths than its configured cap.
class TruncationOverflow : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A structural invariant failed. Reaching this means a bug in the
// library, never bad input. Maps to CLI exit status 2.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace commalg
