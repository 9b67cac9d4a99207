#include "qunc/error.hpp"

namespace qunc {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::TraceNotOne: return "TraceNotOne";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidSpectrum: return "InvalidSpectrum";
    case ErrorCode::DegenerateCoefficient: return "DegenerateCoefficient";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::InvalidDimension: return "InvalidDimension";
    case ErrorCode::InvalidRank: return "InvalidRank";
    case ErrorCode::BudgetZero: return "BudgetZero";
    case ErrorCode::EmptyGrid: return "EmptyGrid";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidPlan: return "InvalidPlan";
    case ErrorCode::InequalityViolated: return "InequalityViolated";
  }
  return "Unknown";
}

}  // namespace qunc
