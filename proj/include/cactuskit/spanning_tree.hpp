#pragma once

#include <span>
#include <utility>
#include <vector>

#include "cactuskit/graph.hpp"

namespace cactus {

// Index of a tree edge in 0..n-2 (ascending host edge id order).
using TreeEdgeIndex = int;

// A validated spanning tree of a host graph, rooted at vertex 0.
// Holds a non-owning pointer to the host, which must outlive it.
class SpanningTree {
 public:
  static constexpr Vertex kRoot = 0;

  const Graph& host() const noexcept { return *host_; }
  int n() const noexcept { return host_->n(); }

  // Host edge ids, ascending. Position in this list is the TreeEdgeIndex.
  const std::vector<EdgeId>& tree_edge_ids() const noexcept { return tree_edges_; }
  bool is_tree_edge(EdgeId e) const { return tree_edge_index(e) >= 0; }
  // -1 for non-tree edges.
  TreeEdgeIndex tree_edge_index(EdgeId e) const { return index_of_edge_.at(static_cast<std::size_t>(e)); }

  Vertex parent(Vertex v) const { return parent_.at(static_cast<std::size_t>(v)); }
  int depth(Vertex v) const { return depth_.at(static_cast<std::size_t>(v)); }
  // Tree edge joining v to its parent; -1 at the root.
  TreeEdgeIndex up_edge(Vertex v) const { return up_edge_.at(static_cast<std::size_t>(v)); }
  // Vertices in BFS order from the root (non-decreasing depth).
  const std::vector<Vertex>& bfs_order() const noexcept { return bfs_order_; }
  std::span<const Vertex> children(Vertex v) const { return children_.at(static_cast<std::size_t>(v)); }

  std::vector<EdgeId> non_tree_edge_ids() const;

 private:
  friend SpanningTree make_spanning_tree(const Graph& g, std::span<const EdgeId> edge_ids);

  const Graph* host_ = nullptr;
  std::vector<EdgeId> tree_edges_;
  std::vector<TreeEdgeIndex> index_of_edge_;
  std::vector<Vertex> parent_;
  std::vector<int> depth_;
  std::vector<TreeEdgeIndex> up_edge_;
  std::vector<Vertex> bfs_order_;
  std::vector<std::vector<Vertex>> children_;
};

// Builds from host edge ids. Throws WrongEdgeCount / NotSpanningTree.
SpanningTree make_spanning_tree(const Graph& g, std::span<const EdgeId> edge_ids);

// Builds from vertex pairs that must all be edges of g.
SpanningTree validate_spanning_tree(const Graph& g, std::span<const std::pair<Vertex, Vertex>> tree_pairs);

// Deterministic BFS tree from vertex 0 (throws NotConnected).
SpanningTree bfs_spanning_tree(const Graph& g);

Vertex lca(const SpanningTree& t, Vertex u, Vertex v);

// The unique u-v path of a tree.
struct TreePath {
  EdgeId nontree_edge = -1;  // host id of the closing edge, -1 for plain queries
  Vertex a = -1;
  Vertex b = -1;
  Vertex lca = -1;
  std::vector<Vertex> vertices;       // a ... lca ... b
  std::vector<TreeEdgeIndex> edges;   // ascending

  int length() const noexcept { return static_cast<int>(edges.size()); }
};

// Throws SameEndpoints when u == v.
TreePath tree_path(const SpanningTree& t, Vertex u, Vertex v);

// True iff the sorted edge sets share an element.
bool paths_share_edge(const TreePath& p, const TreePath& q);

}  // namespace cactus
