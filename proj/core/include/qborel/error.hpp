#pragma once

#include <stdexcept>
#include <string>

namespace qborel {

// Violated mathematical precondition (wrong poset, non-Borel input, ...).
// The CLI maps this to exit code 1.
class MathError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A configured resource limit was hit (closure node cap, recursion depth).
class LimitError : public MathError {
public:
  using MathError::MathError;
};

// Session text could not be parsed.  Carries a 1-based source location.
// The CLI maps this to exit code 2.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& msg, int line, int col)
      : std::runtime_error(msg + " (line " + std::to_string(line) + ", col " +
                           std::to_string(col) + ")"),
        line_(line),
        col_(col) {}

  int line() const { return line_; }
  int col() const { return col_; }

private:
  int line_;
  int col_;
};

}  // namespace qborel
