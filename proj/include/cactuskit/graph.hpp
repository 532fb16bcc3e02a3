#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace cactus {

using Vertex = int;
using EdgeId = int;
// Vertex subsets over graphs with at most 64 vertices.
using VertexMask = std::uint64_t;

inline constexpr int kMaskBits = 64;

constexpr VertexMask bit(Vertex v) noexcept { return VertexMask{1} << v; }

struct Edge {
  Vertex u;
  Vertex v;

  Vertex other(Vertex w) const noexcept { return w == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  Vertex neighbor;
  EdgeId edge;
};

// Simple undirected graph on vertices 0..n-1 with dense, stable edge ids.
// Immutable once built.
class Graph {
 public:
  Graph() = default;

  // Validates simplicity and vertex range; throws cactus::Error.
  Graph(int n, std::vector<Edge> edges);

  int n() const noexcept { return n_; }
  int m() const noexcept { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }

  std::span<const Incidence> adjacency(Vertex v) const {
    return adjacency_.at(static_cast<std::size_t>(v));
  }
  int degree(Vertex v) const { return static_cast<int>(adjacency(v).size()); }

  std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;

  // Neighborhood as a bitmask. Only available when n <= 64.
  bool has_masks() const noexcept { return n_ <= kMaskBits; }
  VertexMask neighbor_mask(Vertex v) const { return neighbor_masks_.at(static_cast<std::size_t>(v)); }
  std::span<const VertexMask> neighbor_masks() const noexcept { return neighbor_masks_; }
  VertexMask all_vertices() const noexcept;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::vector<VertexMask> neighbor_masks_;
};

Graph build_graph(int n, std::span<const std::pair<Vertex, Vertex>> pairs);

// Spanning subgraph (V, {edges in `keep`}) with ids renumbered in the order given.
Graph edge_subgraph(const Graph& g, std::span<const EdgeId> keep);

bool is_connected(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_host_vertex;   // sub vertex -> host vertex
  std::vector<Vertex> from_host_vertex; // host vertex -> sub vertex or -1
  std::vector<EdgeId> to_host_edge;     // sub edge -> host edge
  std::vector<EdgeId> from_host_edge;   // host edge -> sub edge or -1
};

// G[X]; vertices keep their relative order, edges keep host id order.
InducedSubgraph induced_subgraph(const Graph& g, VertexMask subset);

// Bitmask helpers for n <= 64.
bool mask_is_connected(std::span<const VertexMask> adjacency, VertexMask subset);
int induced_edge_count(std::span<const VertexMask> adjacency, VertexMask subset);

}  // namespace cactus
