#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace scrollkit {

enum class ErrorCode {
  kFieldMismatch,
  kRemainder,
  kZeroDivisor,
  kBothZero,
  kInvalidArgument,
  kDegenerate,
  kNotThroughFrame,
  kZeroQuadric,
  kInternal,
  kCenterNotOnCurve,
  kDependentConditions,
  kEmptyFamily,
  kNoCoprimeWitness,
  kInvalidTrials,
  kFieldTooSmall,
  kPrecondition,
};

/// Upper-case identifier used in reports, e.g. "NOT_THROUGH_FRAME".
std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace scrollkit
