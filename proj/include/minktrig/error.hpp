#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace minktrig {

enum class ErrorCode {
  LightlikeNormalization,
  DegenerateSpan,
  OffSurface,
  CoincidentPoints,
  AntipodalPoints,
  InfiniteSeparation,
  ParamOutOfRange,
  EmptySegment,
  LightlikeSegment,
  MixedSegmentKinds,
  LightlikeLeg,
  DegenerateLeg,
  DomainViolation,
  DuplicateVertices,
  NotSpatiolateral,
  DegenerateTriangle,
  UnsupportedFamily,
  PolarNonExistent,
  RejectionBudgetExhausted,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Domain error raised by every checked operation in the library. The code
/// names the violated precondition; the message carries the numbers.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace minktrig
