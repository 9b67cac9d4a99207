#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qunc {

enum class ErrorCode {
  NotHermitian,
  NonFinite,
  NotPositive,
  TraceNotOne,
  DimensionMismatch,
  InvalidSpectrum,
  DegenerateCoefficient,
  DomainError,
  InvalidDimension,
  InvalidRank,
  BudgetZero,
  EmptyGrid,
  ParseError,
  InvalidPlan,
  InequalityViolated,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so
// callers (CLI, Python layer) can map it without string matching.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace qunc
