#pragma once

#include <cstdint>
#include <functional>

#include <boost/multiprecision/cpp_int.hpp>

#include "cactuskit/error.hpp"
#include "cactuskit/graph.hpp"
#include "cactuskit/spanning_tree.hpp"

namespace cactus {

using BigInt = boost::multiprecision::cpp_int;

// Number of spanning trees via the matrix-tree theorem: a Laplacian
// cofactor evaluated exactly with fraction-free (Bareiss) elimination.
BigInt count_spanning_trees(const Graph& g);

struct TreeEnumStats {
  std::uint64_t trees_visited = 0;
  std::int64_t best_value = -1;  // filled in by callers that optimize over trees
  BigInt spanning_tree_count = 0;
};

class LimitExceededError : public Error {
 public:
  LimitExceededError(const std::string& detail, TreeEnumStats partial)
      : Error(ErrorCode::LimitExceeded, detail), partial_(std::move(partial)) {}
  const TreeEnumStats& partial() const noexcept { return partial_; }

 private:
  TreeEnumStats partial_;
};

using TreeVisitor = std::function<void(const SpanningTree&)>;

// Calls `visit` once per spanning tree (as an edge-id set). Include/exclude
// branching over edges in id order, pruned so that every branch still holds
// a spanning tree, giving polynomial work per tree. Throws
// LimitExceededError after `limit` trees if more remain.
TreeEnumStats enumerate_spanning_trees(const Graph& g, const TreeVisitor& visit, std::uint64_t limit);

}  // namespace cactus
