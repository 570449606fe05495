#include "lucasres/errors.hpp"

namespace lucasres {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::HypothesisViolation: return "HypothesisViolation";
    case ErrorCode::UnsatisfiableHypothesis: return "UnsatisfiableHypothesis";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::UnsupportedModulus: return "UnsupportedModulus";
    case ErrorCode::ZeroA: return "ZeroA";
    case ErrorCode::InternalDivisibilityFailure: return "InternalDivisibilityFailure";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

void raise(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace lucasres
