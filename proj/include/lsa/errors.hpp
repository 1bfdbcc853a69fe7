#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lsa {

enum class ErrorKind {
  NonExactDivision,
  ZeroDenominator,
  SizeMismatch,
  ShapeMismatch,
  SingularLambdaBlock,
  SupportViolation,
  DualSymmetryViolation,
  InconsistentInput,
  InvalidBlock,
  InvalidTable,
  UnknownLabel,
  ParseError,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonExactDivision: return "NonExactDivision";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::SingularLambdaBlock: return "SingularLambdaBlock";
    case ErrorKind::SupportViolation: return "SupportViolation";
    case ErrorKind::DualSymmetryViolation: return "DualSymmetryViolation";
    case ErrorKind::InconsistentInput: return "InconsistentInput";
    case ErrorKind::InvalidBlock: return "InvalidBlock";
    case ErrorKind::InvalidTable: return "InvalidTable";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind; the
/// CLI maps kinds to exit codes and diagnostics.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lsa
