#pragma once

#include <span>
#include <vector>

#include "cactuskit/graph.hpp"

namespace cactus {

enum class BlockKind { BridgeEdge, SimpleCycle, Other };

struct Block {
  std::vector<EdgeId> edges;  // ascending
  BlockKind kind = BlockKind::Other;
};

// Maximal biconnected subgraphs. Blocks are ordered by smallest edge id.
struct BlockDecomposition {
  std::vector<Block> blocks;
  std::vector<Vertex> cut_vertices;  // ascending

  bool all_cactus_blocks() const noexcept;
};

// Hopcroft-Tarjan with an explicit stack. Throws NotConnected.
BlockDecomposition biconnected_blocks(const Graph& g);

struct CactusVerdict {
  bool cactus = false;
  BlockDecomposition witness;
};

// A connected graph is a cactus iff every block is a bridge or a simple cycle.
CactusVerdict is_cactus(const Graph& g);

// True iff G[subset] is connected and a cactus. Works on neighbor bitmasks
// (n <= 64): a DFS tree plus back-edge coverage counts, where a cactus is
// exactly a graph in which no tree edge lies on two fundamental cycles.
bool mask_induces_cactus(std::span<const VertexMask> adjacency, VertexMask subset);

// Same test for the spanning subgraph (V, edges) on n <= 64 vertices.
bool edges_form_spanning_cactus(int n, std::span<const Edge> edges);

}  // namespace cactus
