#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cactus {

enum class ErrorCode {
  // invalid input
  LoopEdge,
  DuplicateEdge,
  VertexOutOfRange,
  EmptyGraph,
  NotConnected,
  EmptySubset,
  NotConnectedSubset,
  EdgeNotInGraph,
  WrongEdgeCount,
  NotSpanningTree,
  InvalidTree,
  SameEndpoints,
  SyntaxError,
  IoError,
  InfeasibleParams,
  // limits
  TooLargeForOracle,
  TooManyEdges,
  TooManyVertices,
  TooManyTrees,
  LimitExceeded,
  SubsetTooLarge,
  Overflow,
  // programming errors / failed cross-checks
  PreconditionViolated,
  InternalError,
};

enum class ErrorCategory { InvalidInput = 1, LimitExceeded = 2, Internal = 3 };

std::string_view to_string(ErrorCode code) noexcept;
ErrorCategory category_of(ErrorCode code) noexcept;

// Process exit code for the CLI: 1 invalid input, 2 limits, 3 internal.
inline int exit_code_of(ErrorCode code) noexcept {
  return static_cast<int>(category_of(code));
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }
  ErrorCategory category() const noexcept { return category_of(code_); }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& detail = {});

}  // namespace cactus
