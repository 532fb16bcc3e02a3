#include "cactuskit/graph.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "cactuskit/error.hpp"

namespace cactus {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) fail(ErrorCode::VertexOutOfRange, "negative vertex count");
  adjacency_.resize(static_cast<std::size_t>(n));
  std::set<std::pair<Vertex, Vertex>> seen;
  for (EdgeId id = 0; id < m(); ++id) {
    const auto [u, v] = edges_[static_cast<std::size_t>(id)];
    if (u < 0 || v < 0 || u >= n || v >= n) {
      fail(ErrorCode::VertexOutOfRange,
           "edge " + std::to_string(id) + " (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    if (u == v) fail(ErrorCode::LoopEdge, "vertex " + std::to_string(u));
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
      fail(ErrorCode::DuplicateEdge, "(" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    adjacency_[static_cast<std::size_t>(u)].push_back({v, id});
    adjacency_[static_cast<std::size_t>(v)].push_back({u, id});
  }
  if (n <= kMaskBits) {
    neighbor_masks_.assign(static_cast<std::size_t>(n), 0);
    for (const auto& e : edges_) {
      neighbor_masks_[static_cast<std::size_t>(e.u)] |= bit(e.v);
      neighbor_masks_[static_cast<std::size_t>(e.v)] |= bit(e.u);
    }
  }
}

std::optional<EdgeId> Graph::find_edge(Vertex u, Vertex v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return std::nullopt;
  // scan the shorter row
  const auto& row = degree(u) <= degree(v) ? adjacency_[static_cast<std::size_t>(u)]
                                           : adjacency_[static_cast<std::size_t>(v)];
  const Vertex target = degree(u) <= degree(v) ? v : u;
  for (const auto& inc : row) {
    if (inc.neighbor == target) return inc.edge;
  }
  return std::nullopt;
}

VertexMask Graph::all_vertices() const noexcept {
  return n_ >= kMaskBits ? ~VertexMask{0} : bit(n_) - 1;
}

Graph build_graph(int n, std::span<const std::pair<Vertex, Vertex>> pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [u, v] : pairs) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

Graph edge_subgraph(const Graph& g, std::span<const EdgeId> keep) {
  std::vector<Edge> edges;
  edges.reserve(keep.size());
  for (EdgeId e : keep) edges.push_back(g.edge(e));
  return Graph(g.n(), std::move(edges));
}

bool is_connected(const Graph& g) {
  if (g.n() == 0) fail(ErrorCode::EmptyGraph);
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (const auto& inc : g.adjacency(v)) {
      if (!seen[static_cast<std::size_t>(inc.neighbor)]) {
        seen[static_cast<std::size_t>(inc.neighbor)] = 1;
        ++reached;
        stack.push_back(inc.neighbor);
      }
    }
  }
  return reached == g.n();
}

InducedSubgraph induced_subgraph(const Graph& g, VertexMask subset) {
  if (!g.has_masks()) fail(ErrorCode::TooManyVertices, "bitmask subsets need n <= 64");
  subset &= g.all_vertices();
  if (subset == 0) fail(ErrorCode::EmptySubset);

  InducedSubgraph out;
  out.from_host_vertex.assign(static_cast<std::size_t>(g.n()), -1);
  out.from_host_edge.assign(static_cast<std::size_t>(g.m()), -1);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (subset & bit(v)) {
      out.from_host_vertex[static_cast<std::size_t>(v)] = static_cast<Vertex>(out.to_host_vertex.size());
      out.to_host_vertex.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.m(); ++e) {
    const auto& [u, v] = g.edge(e);
    const Vertex su = out.from_host_vertex[static_cast<std::size_t>(u)];
    const Vertex sv = out.from_host_vertex[static_cast<std::size_t>(v)];
    if (su < 0 || sv < 0) continue;
    out.from_host_edge[static_cast<std::size_t>(e)] = static_cast<EdgeId>(edges.size());
    out.to_host_edge.push_back(e);
    edges.push_back({su, sv});
  }
  out.graph = Graph(static_cast<int>(out.to_host_vertex.size()), std::move(edges));
  return out;
}

bool mask_is_connected(std::span<const VertexMask> adjacency, VertexMask subset) {
  if (subset == 0) return false;
  VertexMask reached = subset & (~subset + 1);
  VertexMask frontier = reached;
  while (frontier) {
    VertexMask next = 0;
    while (frontier) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= adjacency[static_cast<std::size_t>(v)];
    }
    next &= subset & ~reached;
    reached |= next;
    frontier = next;
  }
  return reached == subset;
}

int induced_edge_count(std::span<const VertexMask> adjacency, VertexMask subset) {
  int twice = 0;
  for (VertexMask rest = subset; rest; rest &= rest - 1) {
    twice += std::popcount(adjacency[static_cast<std::size_t>(std::countr_zero(rest))] & subset);
  }
  return twice / 2;
}

}  // namespace cactus
