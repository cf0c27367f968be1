#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wmst {

enum class ErrorCode {
  kDisconnectedGraph,
  kSelfLoop,
  kDuplicateEdge,
  kVertexOutOfRange,
  kNonpositiveWeight,
  kMissingWeight,
  kEdgeInTree,
  kNotSpanning,
  kTooLarge,
  kBadParameter,
  kLemmaViolation,
  kParseError,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for every recoverable failure in the library. The
/// code identifies the failure class; the message carries the details.
class WmstError : public std::runtime_error {
 public:
  WmstError(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wmst
