#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace borel {

enum class ErrorKind {
  InvalidArgument,
  MismatchedVariables,
  ExponentOverflow,
  SingularMatrix,
  NotHomogeneous,
  TrialsDisagree,
  StabilityCheckFailed,
  NotArtinian,
  NotStable,
  DegreeBoundTooSmall,
  NoPurePower,
  StrictlyIncreasing,
  InconsistentInput,
  SumMismatch,
  InconsistentTable,
  StabilityViolated,
  AsymmetricHilbert,
  SyntaxError,
  UnknownVariable,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::MismatchedVariables: return "MismatchedVariables";
    case ErrorKind::ExponentOverflow: return "ExponentOverflow";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::TrialsDisagree: return "TrialsDisagree";
    case ErrorKind::StabilityCheckFailed: return "StabilityCheckFailed";
    case ErrorKind::NotArtinian: return "NotArtinian";
    case ErrorKind::NotStable: return "NotStable";
    case ErrorKind::DegreeBoundTooSmall: return "DegreeBoundTooSmall";
    case ErrorKind::NoPurePower: return "NoPurePower";
    case ErrorKind::StrictlyIncreasing: return "StrictlyIncreasing";
    case ErrorKind::InconsistentInput: return "InconsistentInput";
    case ErrorKind::SumMismatch: return "SumMismatch";
    case ErrorKind::InconsistentTable: return "InconsistentTable";
    case ErrorKind::StabilityViolated: return "StabilityViolated";
    case ErrorKind::AsymmetricHilbert: return "AsymmetricHilbert";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
  }
  return "Unknown";
}

/// Every failure raised by the library. `kind()` is stable and is what the
/// CLI reports in its machine-readable error object.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Internal invariant violations, as opposed to bad input.
  bool is_internal() const noexcept {
    return kind_ == ErrorKind::StabilityCheckFailed ||
           kind_ == ErrorKind::StabilityViolated;
  }

 private:
  ErrorKind kind_;
};

/// Parse failure with a 1-based source position.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& message)
      : Error(ErrorKind::SyntaxError,
              std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace borel
