#include "isol1/errors.hpp"

namespace isol1 {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::SelfIntersecting: return "SelfIntersecting";
    case ErrorCode::DegenerateArea: return "DegenerateArea";
    case ErrorCode::NonFiniteCoordinate: return "NonFiniteCoordinate";
    case ErrorCode::NonPositiveScale: return "NonPositiveScale";
    case ErrorCode::NonPositiveResolution: return "NonPositiveResolution";
    case ErrorCode::NonPositiveTolerance: return "NonPositiveTolerance";
    case ErrorCode::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorCode::RangeError: return "RangeError";
    case ErrorCode::GridTooFine: return "GridTooFine";
    case ErrorCode::EvalBudgetExceeded: return "EvalBudgetExceeded";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
    case ErrorCode::NegativeBeyondTolerance: return "NegativeBeyondTolerance";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace isol1
