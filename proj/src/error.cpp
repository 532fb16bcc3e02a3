#include "cactuskit/error.hpp"

namespace cactus {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::NotConnectedSubset: return "NotConnectedSubset";
    case ErrorCode::EdgeNotInGraph: return "EdgeNotInGraph";
    case ErrorCode::WrongEdgeCount: return "WrongEdgeCount";
    case ErrorCode::NotSpanningTree: return "NotSpanningTree";
    case ErrorCode::InvalidTree: return "InvalidTree";
    case ErrorCode::SameEndpoints: return "SameEndpoints";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::InfeasibleParams: return "InfeasibleParams";
    case ErrorCode::TooLargeForOracle: return "TooLargeForOracle";
    case ErrorCode::TooManyEdges: return "TooManyEdges";
    case ErrorCode::TooManyVertices: return "TooManyVertices";
    case ErrorCode::TooManyTrees: return "TooManyTrees";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::SubsetTooLarge: return "SubsetTooLarge";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "Unknown";
}

ErrorCategory category_of(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::TooLargeForOracle:
    case ErrorCode::TooManyEdges:
    case ErrorCode::TooManyVertices:
    case ErrorCode::TooManyTrees:
    case ErrorCode::LimitExceeded:
    case ErrorCode::SubsetTooLarge:
    case ErrorCode::Overflow:
      return ErrorCategory::LimitExceeded;
    case ErrorCode::PreconditionViolated:
    case ErrorCode::InternalError:
      return ErrorCategory::Internal;
    default:
      return ErrorCategory::InvalidInput;
  }
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(detail.empty()
                             ? std::string(to_string(code))
                             : std::string(to_string(code)) + ": " + detail),
      code_(code) {}

void fail(ErrorCode code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace cactus
