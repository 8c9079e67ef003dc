#ifndef MCKP_ERRORS_HPP_
#define MCKP_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace mckp {

enum class ErrorCode {
  EmptyInstance,
  EmptyGroup,
  NegativeValue,
  IndexOutOfRange,
  InvalidSpec,
  TooLarge,
  InfeasibleInstance,
  NonIntegralData,
  MemoryBudgetExceeded,
  DegenerateObjective,
  DegenerateGeometry,
  IterationLimit,
  ParseError,
  VersionMismatch,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::EmptyInstance: return "EmptyInstance";
    case ErrorCode::EmptyGroup: return "EmptyGroup";
    case ErrorCode::NegativeValue: return "NegativeValue";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InfeasibleInstance: return "InfeasibleInstance";
    case ErrorCode::NonIntegralData: return "NonIntegralData";
    case ErrorCode::MemoryBudgetExceeded: return "MemoryBudgetExceeded";
    case ErrorCode::DegenerateObjective: return "DegenerateObjective";
    case ErrorCode::DegenerateGeometry: return "DegenerateGeometry";
    case ErrorCode::IterationLimit: return "IterationLimit";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::VersionMismatch: return "VersionMismatch";
  }
  return "Unknown";
}

// All library failures are reported through this one exception type so
// callers can switch on code(). ParseError additionally carries the
// 1-based line number of the offending input line.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, int line = 0)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code),
        line_(line) {}

  ErrorCode code() const { return code_; }
  int line() const { return line_; }

 private:
  ErrorCode code_;
  int line_;
};

}  // namespace mckp

#endif  // MCKP_ERRORS_HPP_
