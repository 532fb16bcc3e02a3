#pragma once

#include <vector>

#include "cactuskit/graph.hpp"
#include "cactuskit/spanning_tree.hpp"

namespace cactus {

// Auxiliary graph over the non-tree edges: two are adjacent iff their tree
// paths share a tree edge.
struct ConflictGraph {
  std::vector<EdgeId> nontree_edge_ids;      // path index -> host edge id
  std::vector<std::vector<int>> adjacency;   // ascending path indices

  int k() const noexcept { return static_cast<int>(nontree_edge_ids.size()); }
  bool adjacent(int i, int j) const;
};

struct ConflictBuild {
  std::vector<TreePath> paths;  // one per non-tree edge, ascending edge id
  ConflictGraph conflicts;
};

// Tree paths of every non-tree edge, in ascending host edge id order.
std::vector<TreePath> nontree_paths(const SpanningTree& t);

ConflictBuild build_conflict_graph(const Graph& g, const SpanningTree& t);

// Maximum subset of pairwise edge-disjoint paths (equivalently, a maximum
// independent set of the conflict graph). Returns ascending path indices.
//
// Vertices are processed bottom-up. At v the alive paths whose LCA is v
// form a matching instance over the down-edges of v (a path ending at v
// pairs its down-edge with a private degree-1 node); its maximum matching
// size is what v contributes. A path from higher up may pass through v
// only via a down-edge that some maximum matching at v leaves exposed, so
// that set is recorded for the ancestors. A second, top-down pass fixes
// the concrete matchings so every routed path finds its down-edge free.
std::vector<int> max_disjoint_paths(const SpanningTree& t, const std::vector<TreePath>& paths);

struct StcResult {
  int added_count = 0;
  std::vector<EdgeId> added_edge_ids;  // ascending host ids
  int cactus_edge_count = 0;           // (n - 1) + added_count
};

// Maximum F of non-tree edges with (V, E(T) + F) a cactus. The witness is
// re-checked with is_cactus before returning.
StcResult spanning_tree_to_cactus(const Graph& g, const SpanningTree& t);

// Exhaustive oracle over subsets of non-tree edges (at most 20 of them).
int stc_brute_force(const Graph& g, const SpanningTree& t);

}  // namespace cactus
