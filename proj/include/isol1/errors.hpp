#pragma once

#include <stdexcept>
#include <string>

namespace isol1 {

enum class ErrorCode {
  TooFewVertices,
  SelfIntersecting,
  DegenerateArea,
  NonFiniteCoordinate,
  NonPositiveScale,
  NonPositiveResolution,
  NonPositiveTolerance,
  ParamOutOfRange,
  RangeError,
  GridTooFine,
  EvalBudgetExceeded,
  GenerationFailed,
  NegativeBeyondTolerance,
  ParseError,
  InvalidArgument,
};

const char* to_string(ErrorCode code);

/// All library failures are reported through this exception type so callers
/// can branch on the code without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace isol1
