#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chronoscale {

enum class ErrorCode {
  // timescale
  NonMonotone,
  IndexOutOfRange,
  TooShort,
  BoundaryIndex,
  InvalidStep,
  // calculus
  OrderZeroOrNegative,
  WindowTooSmall,
  SupportTouchesBoundary,
  ReversedInterval,
  InvalidSignal,
  // exponential / transform
  PoleHit,
  ImproperRational,
  PoleOnScale,
  UntaggedPole,
  ContourInvalid,
  // systems
  DegenerateDenominator,
  SingularStep,
  ScaleMismatch,
  NotShiftClosed,
  ReflectionOffGrid,
  TargetOffSuperScale,
  IncompatibleStep,
  // fractional
  RepeatedGraininess,
  // io
  ParseError,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace chronoscale
