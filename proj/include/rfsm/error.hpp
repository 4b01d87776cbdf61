#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rfsm {

enum class ErrorKind {
  duplicate_state,
  duplicate_symbol,
  invalid_name,
  non_partition,
  unknown_state,
  unknown_symbol,
  mismatched_space,
  alphabet_mismatch,
  bridge_totality,
  wiring_totality,
  totality,
  not_onto,
  budget_exceeded,
  shape_mismatch,
  precondition_failed,
  syntax,
  semantic,
  non_definable_entry,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::duplicate_state: return "DuplicateState";
    case ErrorKind::duplicate_symbol: return "DuplicateSymbol";
    case ErrorKind::invalid_name: return "InvalidName";
    case ErrorKind::non_partition: return "NonPartition";
    case ErrorKind::unknown_state: return "UnknownState";
    case ErrorKind::unknown_symbol: return "UnknownSymbol";
    case ErrorKind::mismatched_space: return "MismatchedSpace";
    case ErrorKind::alphabet_mismatch: return "AlphabetMismatch";
    case ErrorKind::bridge_totality: return "BridgeTotalityError";
    case ErrorKind::wiring_totality: return "WiringTotalityError";
    case ErrorKind::totality: return "TotalityError";
    case ErrorKind::not_onto: return "NotOnto";
    case ErrorKind::budget_exceeded: return "BudgetExceeded";
    case ErrorKind::shape_mismatch: return "ShapeMismatch";
    case ErrorKind::precondition_failed: return "PreconditionFailed";
    case ErrorKind::syntax: return "SyntaxError";
    case ErrorKind::semantic: return "SemanticError";
    case ErrorKind::non_definable_entry: return "NonDefinableEntry";
  }
  return "Error";
}

/// Base exception for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by the text readers; line and column are 1-based (0 = unknown).
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t line, std::size_t column, const std::string& message)
      : Error(kind, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                        message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace rfsm
