#ifndef LUCASRES_ERRORS_HPP
#define LUCASRES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lucasres {

enum class ErrorCode {
  InvalidArgument,
  HypothesisViolation,
  UnsatisfiableHypothesis,
  NotInvertible,
  UnsupportedModulus,
  ZeroA,
  InternalDivisibilityFailure,
  InexactDivision,
  Io,
};

const char* error_code_name(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above; the C
/// API maps them one-to-one onto `lr_status`.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& what);

}  // namespace lucasres

#endif  // LUCASRES_ERRORS_HPP
