#include "chronoscale/error.hpp"

namespace chronoscale {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonMonotone: return "NonMonotone";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::BoundaryIndex: return "BoundaryIndex";
    case ErrorCode::InvalidStep: return "InvalidStep";
    case ErrorCode::OrderZeroOrNegative: return "OrderZeroOrNegative";
    case ErrorCode::WindowTooSmall: return "WindowTooSmall";
    case ErrorCode::SupportTouchesBoundary: return "SupportTouchesBoundary";
    case ErrorCode::ReversedInterval: return "ReversedInterval";
    case ErrorCode::InvalidSignal: return "InvalidSignal";
    case ErrorCode::PoleHit: return "PoleHit";
    case ErrorCode::ImproperRational: return "ImproperRational";
    case ErrorCode::PoleOnScale: return "PoleOnScale";
    case ErrorCode::UntaggedPole: return "UntaggedPole";
    case ErrorCode::ContourInvalid: return "ContourInvalid";
    case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::SingularStep: return "SingularStep";
    case ErrorCode::ScaleMismatch: return "ScaleMismatch";
    case ErrorCode::NotShiftClosed: return "NotShiftClosed";
    case ErrorCode::ReflectionOffGrid: return "ReflectionOffGrid";
    case ErrorCode::TargetOffSuperScale: return "TargetOffSuperScale";
    case ErrorCode::IncompatibleStep: return "IncompatibleStep";
    case ErrorCode::RepeatedGraininess: return "RepeatedGraininess";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

}  // namespace chronoscale
