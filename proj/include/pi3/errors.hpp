#pragma once

#include <stdexcept>
#include <string>

namespace pi3 {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Coset enumeration exceeded its cap; the group may be infinite or too large.
class ResourceExhausted : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operands live over different groups (or are otherwise incompatible).
class GroupMismatch : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// An algebraic construction produced data violating its own invariants.
class InvariantViolation : public std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace pi3
