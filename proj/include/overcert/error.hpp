#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace overcert {

enum class ErrorCode {
  DimensionMismatch,
  NonFiniteResult,
  SingularJacobian,
  NotSquare,
  PreconditionFailed,
  BudgetExhausted,
  ZeroPolynomial,
  EmptyInput,
  DimensionTooHigh,
  RankDeficient,
  NonIntegerResult,
  InconsistentInput,
  SchemaError,
  RankDeficientMatrix,
  InputNotDistinct,
  DegenerateData,
  NonFiniteFloat,
  IoError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonFiniteResult: return "NonFiniteResult";
    case ErrorCode::SingularJacobian: return "SingularJacobian";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::DimensionTooHigh: return "DimensionTooHigh";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::NonIntegerResult: return "NonIntegerResult";
    case ErrorCode::InconsistentInput: return "InconsistentInput";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::RankDeficientMatrix: return "RankDeficientMatrix";
    case ErrorCode::InputNotDistinct: return "InputNotDistinct";
    case ErrorCode::DegenerateData: return "DegenerateData";
    case ErrorCode::NonFiniteFloat: return "NonFiniteFloat";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require_dims(std::size_t got, std::size_t want, const char* where) {
  if (got != want) {
    fail(ErrorCode::DimensionMismatch, std::string(where) + ": expected " +
                                           std::to_string(want) + ", got " +
                                           std::to_string(got));
  }
}

}  // namespace overcert
