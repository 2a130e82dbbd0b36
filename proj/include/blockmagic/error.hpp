#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace blockmagic {

enum class ErrorCode {
  ZeroDivision,
  Parse,
  DimensionMismatch,
  NotSquare,
  Singular,
  DimensionTooLarge,
  NotSemimagic,
  InconsistentBlocks,
  InvalidComponents,
  NotBalanced,
  NotAssociatedEven,
  NotAssociatedWeightZero,
  NotParasymmetric,
  LambdaZero,
  ZeroVector,
  NoRegularPivot,
  InvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

/// Domain error raised by every module. The code is stable and appears in
/// CLI reports; the message is free text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroDivision: return "ZeroDivision";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::NotSemimagic: return "NotSemimagic";
    case ErrorCode::InconsistentBlocks: return "InconsistentBlocks";
    case ErrorCode::InvalidComponents: return "InvalidComponents";
    case ErrorCode::NotBalanced: return "NotBalanced";
    case ErrorCode::NotAssociatedEven: return "NotAssociatedEven";
    case ErrorCode::NotAssociatedWeightZero: return "NotAssociatedWeightZero";
    case ErrorCode::NotParasymmetric: return "NotParasymmetric";
    case ErrorCode::LambdaZero: return "LambdaZero";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NoRegularPivot: return "NoRegularPivot";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace blockmagic
