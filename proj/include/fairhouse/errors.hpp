#pragma once

#include <stdexcept>
#include <string>

namespace fairhouse {

// An instance violates a structural invariant (negative value, empty agent
// set, label count mismatch, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed input text. Line and column are 1-based; 0 means unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column,
             std::string field = {})
      : std::runtime_error(format(message, line, column, field)),
        line_(line),
        column_(column),
        field_(std::move(field)) {}

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& field() const { return field_; }

 private:
  static std::string format(const std::string& message, int line, int column,
                            const std::string& field) {
    std::string out;
    if (line > 0) {
      out += "line " + std::to_string(line);
      if (column > 0) out += ", column " + std::to_string(column);
      out += ": ";
    }
    if (!field.empty()) out += "field '" + field + "': ";
    return out + message;
  }

  int line_;
  int column_;
  std::string field_;
};

// Allocation is not injective, refers to a house out of range, or has the
// wrong number of agents.
class InvalidAllocation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A solver was called outside the regime it is defined for (e.g. m > n).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// No matching saturating the smaller side exists.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fairhouse
