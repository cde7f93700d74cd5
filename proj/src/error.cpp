#include "liftenum/error.hpp"

namespace liftenum {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisorNotMonicUnit: return "DivisorNotMonicUnit";
    case ErrorCode::ContextNotPrimeField: return "ContextNotPrimeField";
    case ErrorCode::UnsupportedLength: return "UnsupportedLength";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::InvalidModulus: return "InvalidModulus";
    case ErrorCode::SelfDualityFailed: return "SelfDualityFailed";
    case ErrorCode::NotFreeCode: return "NotFreeCode";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::LayoutMismatch: return "LayoutMismatch";
    case ErrorCode::NonLinearAssignment: return "NonLinearAssignment";
    case ErrorCode::NotIntegral: return "NotIntegral";
    case ErrorCode::NegativeCoefficient: return "NegativeCoefficient";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::MissingSeed: return "MissingSeed";
    case ErrorCode::Underdetermined: return "Underdetermined";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::UnknownTable: return "UnknownTable";
    case ErrorCode::UnsupportedAlphabet: return "UnsupportedAlphabet";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace liftenum
