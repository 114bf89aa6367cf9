#pragma once

#include <stdexcept>
#include <string>

namespace crepant {

enum class ErrorCode {
  InvalidArgument,
  ZeroVector,
  NonSquare,
  NonPrimitive,
  DimensionMismatch,
  DegenerateInput,
  DuplicateVertex,
  RedundantVertex,
  ContainsLine,
  NotGorenstein,
  PointBudgetExceeded,
  SearchBudgetExceeded,
  InvalidTriangulation,
  ParseError,
  Internal,
};

// The one exception type the library throws. Result-like outcomes
// (Gorenstein absence, search verdicts, validity reports) are values,
// not exceptions.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace crepant
