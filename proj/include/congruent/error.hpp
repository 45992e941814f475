#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace congruent {

enum class ErrorCode {
  PreconditionViolation,
  NotSplit,
  PrecisionExhausted,
  GeneratorNotFound,
  BoundExceeded,
  ComputeFailed,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::PreconditionViolation: return "PRECONDITION_VIOLATION";
    case ErrorCode::NotSplit: return "NOT_SPLIT";
    case ErrorCode::PrecisionExhausted: return "PRECISION_EXHAUSTED";
    case ErrorCode::GeneratorNotFound: return "GENERATOR_NOT_FOUND";
    case ErrorCode::BoundExceeded: return "BOUND_EXCEEDED";
    case ErrorCode::ComputeFailed: return "COMPUTE_FAILED";
  }
  return "UNKNOWN";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace congruent
