#include "wmst/errors.hpp"

namespace wmst {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kNonpositiveWeight: return "NonpositiveWeight";
    case ErrorCode::kMissingWeight: return "MissingWeight";
    case ErrorCode::kEdgeInTree: return "EdgeInTree";
    case ErrorCode::kNotSpanning: return "NotSpanning";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kBadParameter: return "BadParameter";
    case ErrorCode::kLemmaViolation: return "LemmaViolation";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

WmstError::WmstError(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace wmst
