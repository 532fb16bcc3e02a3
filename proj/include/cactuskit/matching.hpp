#pragma once

#include <cstdint>
#include <vector>

namespace cactus {

struct MatchingEdge {
  int a;
  int b;
  std::int64_t tag;  // opaque to the matcher
};

// Undirected instance over nodes 0..node_count-1. Must be simple and loop-free.
struct MatchingInstance {
  int node_count = 0;
  std::vector<MatchingEdge> edges;

  // Throws PreconditionViolated on loops, duplicates or out-of-range nodes.
  void validate() const;
};

struct Matching {
  std::vector<int> edge_ids;  // indices into MatchingInstance::edges, ascending

  int size() const noexcept { return static_cast<int>(edge_ids.size()); }
};

// Maximum-cardinality matching by Edmonds' blossom contraction, O(V^3).
// Augmenting searches start from exposed nodes in ascending id order.
Matching max_matching(const MatchingInstance& inst);

// Exact maximum matching size by exhaustive search; <= 20 edges.
int brute_matching(const MatchingInstance& inst);

// Nodes covered by every maximum matching (the complement is the set of
// nodes left exposed by at least one maximum matching).
std::vector<bool> always_matched_nodes(const MatchingInstance& inst);

// Maximum matching that leaves `exposed_node` uncovered. The caller
// guarantees such a matching has maximum size; otherwise the result is
// merely maximum among matchings avoiding the node.
Matching max_matching_avoiding(const MatchingInstance& inst, int exposed_node);

}  // namespace cactus
