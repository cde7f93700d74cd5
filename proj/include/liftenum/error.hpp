#pragma once

#include <stdexcept>
#include <string>

namespace liftenum {

enum class ErrorCode {
  DivisorNotMonicUnit,
  ContextNotPrimeField,
  UnsupportedLength,
  NotCoprime,
  InvalidModulus,
  SelfDualityFailed,
  NotFreeCode,
  BudgetExceeded,
  LayoutMismatch,
  NonLinearAssignment,
  NotIntegral,
  NegativeCoefficient,
  PreconditionViolated,
  MissingSeed,
  Underdetermined,
  Inconsistent,
  UnknownTable,
  UnsupportedAlphabet,
  ParseError,
};

const char* to_string(ErrorCode code);

/// Single exception type for the library; `code()` tells callers which
/// contract was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Thrown when an exhaustive enumeration would exceed the caller's budget.
/// `required()` is the exact word count as a decimal string (it may not fit
/// in 64 bits).
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::string required, std::string what)
      : Error(ErrorCode::BudgetExceeded, what), required_(std::move(required)) {}

  const std::string& required() const noexcept { return required_; }

 private:
  std::string required_;
};

/// Integrality/sign failure inside the pipeline; `stage()` is the modulus
/// exponent s at which the failure was detected.
class PipelineError : public Error {
 public:
  PipelineError(ErrorCode code, int stage, const std::string& what)
      : Error(code, "stage s=" + std::to_string(stage) + ": " + what), stage_(stage) {}

  int stage() const noexcept { return stage_; }

 private:
  int stage_;
};

}  // namespace liftenum
