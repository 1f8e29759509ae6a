#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tgraph {

enum class ErrorCode {
  InvalidCharacter,
  TailTooLong,
  LengthCapExceeded,
  SameVertex,
  OutOfRange,
  NotThreshold,
  MalformedInput,
  OrderCapExceeded,
  OrderTooSmall,
  InvalidK,
  InsufficientSamples,
  OrderOutOfRange,
  OrderMismatch,
};

std::string_view to_string(ErrorCode code);

// Domain error raised by every public operation. The code identifies the
// violated precondition; what() carries a human readable message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tgraph
