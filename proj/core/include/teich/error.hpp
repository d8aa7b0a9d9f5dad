#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace teich {

enum class ErrorCode {
  kTruncationInsufficient,
  kInconsistentField,
  kDegenerateNormalization,
  kIntegrationDomain,
  kOutsideDomain,
  kNoInterpolation,
  kSingularNode,
  kTooCloseToBoundary,
  kGridShape,
  kOutOfRange,
  kStepTooLarge,
  kNormalizationDefect,
  kAppendixInconsistency,
  kInvalidConfig,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so
// callers (and tests) can distinguish e.g. a truncation problem from a
// domain violation without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace teich
