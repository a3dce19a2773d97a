#pragma once

#include <stdexcept>
#include <string>

namespace charclass {

enum class ErrorKind {
  parse,
  invalid_input,
  dimension_mismatch,
  not_zero_dimensional,
  genericity_failure,
  trial_disagreement,
  budget_exceeded,
  subset_cap_exceeded,
  bad_prime,
  io,
  internal,
};

const char* to_string(ErrorKind kind) noexcept;

// Single exception type for the engine; the kind drives the C API status code
// and the CLI exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Syntax errors carry a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(ErrorKind::parse, "line " + std::to_string(line) + ", column " +
                                    std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace charclass
