#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hitchin {

enum class ErrorCode {
  MalformedGluing,
  Disconnected,
  OddChi,
  NotACycle,
  LoopContraction,
  EmptyFace,
  GenusTooSmall,
  InvariantViolation,
  IndexOutOfRange,
  DivisibilityViolation,
  DimensionMismatch,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (and tests) can dispatch on the kind rather than the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hitchin
