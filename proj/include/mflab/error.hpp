#pragma once

#include <stdexcept>
#include <string>

namespace mflab {

enum class ErrorCode {
  kUndefinedDegree,
  kDivisionByZero,
  kShapeMismatch,
  kVariableMismatch,
  kNotInvariant,
  kNotDivisorDivisible,
  kChartNotInvariant,
  kNotSingular,
  kPrecisionTooLow,
  kUnderdetermined,
  kPrecisionLoss,
  kInvalidArgument,
  kSizeCapExceeded,
  kChartAtInfinity,
  kOnDiscriminant,
  kDegenerateCurve,
  kParse,
  kIo,
};

/// All library failures are reported through this type; `code()` is stable,
/// the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mflab
