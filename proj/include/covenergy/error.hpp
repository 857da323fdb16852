#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace covenergy {

enum class ErrorCode {
  SelfLoop,
  DuplicateEdge,
  VertexOutOfRange,
  SizeBoundExceeded,
  NotACovering,
  NotConnected,
  ConvergenceFailure,
  ComplexRoots,
  InvalidParams,
  NonIntegerMatrix,
  Parse,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; `code()` tells callers what went
/// wrong without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace covenergy
