#include "cactuskit/spanning_tree.hpp"

#include <algorithm>
#include <string>

#include "cactuskit/error.hpp"

namespace cactus {

std::vector<EdgeId> SpanningTree::non_tree_edge_ids() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < host_->m(); ++e) {
    if (!is_tree_edge(e)) out.push_back(e);
  }
  return out;
}

SpanningTree make_spanning_tree(const Graph& g, std::span<const EdgeId> edge_ids) {
  const int n = g.n();
  if (n == 0) fail(ErrorCode::EmptyGraph);
  if (static_cast<int>(edge_ids.size()) != n - 1) {
    fail(ErrorCode::WrongEdgeCount,
         "expected " + std::to_string(n - 1) + " tree edges, got " + std::to_string(edge_ids.size()));
  }
  SpanningTree t;
  t.host_ = &g;
  t.tree_edges_.assign(edge_ids.begin(), edge_ids.end());
  std::sort(t.tree_edges_.begin(), t.tree_edges_.end());
  if (std::adjacent_find(t.tree_edges_.begin(), t.tree_edges_.end()) != t.tree_edges_.end()) {
    fail(ErrorCode::NotSpanningTree, "repeated tree edge");
  }
  const auto un = static_cast<std::size_t>(n);
  t.index_of_edge_.assign(static_cast<std::size_t>(g.m()), -1);
  for (std::size_t i = 0; i < t.tree_edges_.size(); ++i) {
    const EdgeId e = t.tree_edges_[i];
    if (e < 0 || e >= g.m()) fail(ErrorCode::EdgeNotInGraph, "edge id " + std::to_string(e));
    t.index_of_edge_[static_cast<std::size_t>(e)] = static_cast<TreeEdgeIndex>(i);
  }

  t.parent_.assign(un, -1);
  t.depth_.assign(un, -1);
  t.up_edge_.assign(un, -1);
  t.children_.assign(un, {});
  t.depth_[0] = 0;
  t.bfs_order_.push_back(SpanningTree::kRoot);
  for (std::size_t head = 0; head < t.bfs_order_.size(); ++head) {
    const Vertex v = t.bfs_order_[head];
    for (const auto& [w, e] : g.adjacency(v)) {
      const TreeEdgeIndex idx = t.index_of_edge_[static_cast<std::size_t>(e)];
      if (idx < 0 || w == t.parent_[static_cast<std::size_t>(v)]) continue;
      if (t.depth_[static_cast<std::size_t>(w)] >= 0) {
        fail(ErrorCode::NotSpanningTree, "tree edges contain a cycle");
      }
      t.parent_[static_cast<std::size_t>(w)] = v;
      t.depth_[static_cast<std::size_t>(w)] = t.depth_[static_cast<std::size_t>(v)] + 1;
      t.up_edge_[static_cast<std::size_t>(w)] = idx;
      t.children_[static_cast<std::size_t>(v)].push_back(w);
      t.bfs_order_.push_back(w);
    }
  }
  if (static_cast<int>(t.bfs_order_.size()) != n) {
    fail(ErrorCode::NotSpanningTree, "tree edges do not span the graph");
  }
  for (auto& c : t.children_) std::sort(c.begin(), c.end());
  return t;
}

SpanningTree validate_spanning_tree(const Graph& g, std::span<const std::pair<Vertex, Vertex>> tree_pairs) {
  std::vector<EdgeId> ids;
  ids.reserve(tree_pairs.size());
  for (const auto& [u, v] : tree_pairs) {
    const auto e = g.find_edge(u, v);
    if (!e) fail(ErrorCode::EdgeNotInGraph, "(" + std::to_string(u) + "," + std::to_string(v) + ")");
    ids.push_back(*e);
  }
  return make_spanning_tree(g, ids);
}

SpanningTree bfs_spanning_tree(const Graph& g) {
  if (!is_connected(g)) fail(ErrorCode::NotConnected);
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  std::vector<Vertex> queue{0};
  std::vector<EdgeId> ids;
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& [w, e] : g.adjacency(queue[head])) {
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = 1;
      ids.push_back(e);
      queue.push_back(w);
    }
  }
  return make_spanning_tree(g, ids);
}

Vertex lca(const SpanningTree& t, Vertex u, Vertex v) {
  while (t.depth(u) > t.depth(v)) u = t.parent(u);
  while (t.depth(v) > t.depth(u)) v = t.parent(v);
  while (u != v) {
    u = t.parent(u);
    v = t.parent(v);
  }
  return u;
}

TreePath tree_path(const SpanningTree& t, Vertex u, Vertex v) {
  if (u == v) fail(ErrorCode::SameEndpoints, "vertex " + std::to_string(u));
  TreePath p;
  p.a = u;
  p.b = v;
  p.lca = lca(t, u, v);
  for (Vertex w = u; w != p.lca; w = t.parent(w)) {
    p.vertices.push_back(w);
    p.edges.push_back(t.up_edge(w));
  }
  p.vertices.push_back(p.lca);
  std::vector<Vertex> tail;
  for (Vertex w = v; w != p.lca; w = t.parent(w)) {
    tail.push_back(w);
    p.edges.push_back(t.up_edge(w));
  }
  p.vertices.insert(p.vertices.end(), tail.rbegin(), tail.rend());
  std::sort(p.edges.begin(), p.edges.end());
  return p;
}

bool paths_share_edge(const TreePath& p, const TreePath& q) {
  auto i = p.edges.begin();
  auto j = q.edges.begin();
  while (i != p.edges.end() && j != q.edges.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

}  // namespace cactus
