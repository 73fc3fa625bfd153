#pragma once

#include <stdexcept>
#include <string>

namespace waring {

/// Machine-readable failure categories, used by the CLI to map errors to
/// exit codes and by tests to assert on specific failure modes.
enum class ErrorCode {
  AllZero,
  ParseError,
  NotHomogeneous,
  ZeroForm,
  DimensionMismatch,
  FieldMismatch,
  NonSplitApolar,
  NoSplitWitness,
  FamilyEmpty,
  DegenerateProjection,
  NotUnique,
  EmptyIntersection,
  NotMinimalCertificate,
  PreconditionFailed,
  HypothesisFailed,
  TooLarge,
  BudgetExceeded,
  InfeasibleParameters,
  SearchBudgetExceeded,
  CurveTooSmall,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace waring
