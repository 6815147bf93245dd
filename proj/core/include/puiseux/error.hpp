#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace puiseux {

/// Failure categories raised by library operations. The CLI maps every
/// code to exit status 1; only argument-grammar problems exit with 2.
enum class ErrorCode {
  NonPositive,
  NotPrime,
  BadProgression,
  NotFoundWithinLimit,
  NotCofinite,
  BadIndex,
  NotDense,
  PreconditionViolated,
  HypothesisViolated,
  NotAtomic,
  InsufficientMultiplicity,
  GcdOne,
  UnknownClaim,
  ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace puiseux
