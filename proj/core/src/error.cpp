#include "puiseux/error.hpp"

namespace puiseux {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPositive: return "NonPositive";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::BadProgression: return "BadProgression";
    case ErrorCode::NotFoundWithinLimit: return "NotFoundWithinLimit";
    case ErrorCode::NotCofinite: return "NotCofinite";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::NotDense: return "NotDense";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::NotAtomic: return "NotAtomic";
    case ErrorCode::InsufficientMultiplicity: return "InsufficientMultiplicity";
    case ErrorCode::GcdOne: return "GcdOne";
    case ErrorCode::UnknownClaim: return "UnknownClaim";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

}  // namespace puiseux
