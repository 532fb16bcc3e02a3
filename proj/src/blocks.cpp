#include "cactuskit/blocks.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "cactuskit/error.hpp"

namespace cactus {

bool BlockDecomposition::all_cactus_blocks() const noexcept {
  return std::none_of(blocks.begin(), blocks.end(),
                      [](const Block& b) { return b.kind == BlockKind::Other; });
}

namespace {

BlockKind classify(const Graph& g, const std::vector<EdgeId>& edges,
                   std::vector<int>& scratch_degree) {
  if (edges.size() == 1) return BlockKind::BridgeEdge;
  std::vector<Vertex> touched;
  for (EdgeId e : edges) {
    for (Vertex w : {g.edge(e).u, g.edge(e).v}) {
      if (scratch_degree[static_cast<std::size_t>(w)]++ == 0) touched.push_back(w);
    }
  }
  bool cycle = touched.size() == edges.size();
  for (Vertex w : touched) {
    if (scratch_degree[static_cast<std::size_t>(w)] != 2) cycle = false;
    scratch_degree[static_cast<std::size_t>(w)] = 0;
  }
  return cycle ? BlockKind::SimpleCycle : BlockKind::Other;
}

struct Frame {
  Vertex v;
  EdgeId parent_edge;
  std::size_t next;  // next adjacency slot to scan
};

}  // namespace

BlockDecomposition biconnected_blocks(const Graph& g) {
  if (!is_connected(g)) fail(ErrorCode::NotConnected);
  const auto n = static_cast<std::size_t>(g.n());
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<EdgeId> edge_stack;
  std::vector<Frame> frames;
  BlockDecomposition out;
  int clock = 0;

  disc[0] = low[0] = clock++;
  frames.push_back({0, -1, 0});
  while (!frames.empty()) {
    Frame& f = frames.back();
    const auto adj = g.adjacency(f.v);
    if (f.next < adj.size()) {
      const auto [w, e] = adj[f.next++];
      if (e == f.parent_edge) continue;
      auto& dw = disc[static_cast<std::size_t>(w)];
      if (dw < 0) {
        dw = low[static_cast<std::size_t>(w)] = clock++;
        edge_stack.push_back(e);
        frames.push_back({w, e, 0});
      } else if (dw < disc[static_cast<std::size_t>(f.v)]) {
        edge_stack.push_back(e);
        low[static_cast<std::size_t>(f.v)] = std::min(low[static_cast<std::size_t>(f.v)], dw);
      }
      continue;
    }
    const Frame done = f;
    frames.pop_back();
    if (frames.empty()) break;
    const Vertex parent = frames.back().v;
    auto& lp = low[static_cast<std::size_t>(parent)];
    lp = std::min(lp, low[static_cast<std::size_t>(done.v)]);
    if (low[static_cast<std::size_t>(done.v)] >= disc[static_cast<std::size_t>(parent)]) {
      Block block;
      while (true) {
        const EdgeId top = edge_stack.back();
        edge_stack.pop_back();
        block.edges.push_back(top);
        if (top == done.parent_edge) break;
      }
      std::sort(block.edges.begin(), block.edges.end());
      out.blocks.push_back(std::move(block));
    }
  }

  std::vector<int> scratch(n, 0);
  std::vector<int> blocks_at(n, 0);
  for (auto& b : out.blocks) {
    b.kind = classify(g, b.edges, scratch);
    std::vector<Vertex> verts;
    for (EdgeId e : b.edges) {
      verts.push_back(g.edge(e).u);
      verts.push_back(g.edge(e).v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (Vertex v : verts) ++blocks_at[static_cast<std::size_t>(v)];
  }
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const Block& a, const Block& b) { return a.edges.front() < b.edges.front(); });
  for (Vertex v = 0; v < g.n(); ++v) {
    if (blocks_at[static_cast<std::size_t>(v)] >= 2) out.cut_vertices.push_back(v);
  }
  return out;
}

CactusVerdict is_cactus(const Graph& g) {
  CactusVerdict verdict;
  verdict.witness = biconnected_blocks(g);
  verdict.cactus = verdict.witness.all_cactus_blocks();
  return verdict;
}

bool mask_induces_cactus(std::span<const VertexMask> adjacency, VertexMask subset) {
  if (subset == 0) return false;
  std::array<int, kMaskBits> parent{};
  std::array<int, kMaskBits> cover{};
  std::array<int, kMaskBits> order{};
  std::array<int, kMaskBits> stack{};
  int order_len = 0;
  int top = 0;

  const int root = std::countr_zero(subset);
  VertexMask visited = bit(root);
  VertexMask on_stack = bit(root);
  parent[static_cast<std::size_t>(root)] = -1;
  stack[0] = root;
  order[static_cast<std::size_t>(order_len++)] = root;
  top = 1;

  while (top > 0) {
    const int v = stack[static_cast<std::size_t>(top - 1)];
    const VertexMask next = adjacency[static_cast<std::size_t>(v)] & subset & ~visited;
    if (next == 0) {
      on_stack &= ~bit(v);
      --top;
      continue;
    }
    const int w = std::countr_zero(next);
    visited |= bit(w);
    parent[static_cast<std::size_t>(w)] = v;
    // Every visited neighbor of a freshly discovered vertex is an ancestor.
    VertexMask back = adjacency[static_cast<std::size_t>(w)] & on_stack & ~bit(v);
    for (; back; back &= back - 1) {
      ++cover[static_cast<std::size_t>(w)];
      --cover[static_cast<std::size_t>(std::countr_zero(back))];
    }
    on_stack |= bit(w);
    stack[static_cast<std::size_t>(top++)] = w;
    order[static_cast<std::size_t>(order_len++)] = w;
  }
  if (visited != subset) return false;

  for (int i = order_len - 1; i > 0; --i) {
    const int v = order[static_cast<std::size_t>(i)];
    if (cover[static_cast<std::size_t>(v)] > 1) return false;
    cover[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])] += cover[static_cast<std::size_t>(v)];
  }
  return true;
}

bool edges_form_spanning_cactus(int n, std::span<const Edge> edges) {
  if (n <= 0 || n > kMaskBits) fail(ErrorCode::TooManyVertices, "bitmask kernel needs 1 <= n <= 64");
  std::array<VertexMask, kMaskBits> adj{};
  for (const auto& e : edges) {
    adj[static_cast<std::size_t>(e.u)] |= bit(e.v);
    adj[static_cast<std::size_t>(e.v)] |= bit(e.u);
  }
  const VertexMask all = n == kMaskBits ? ~VertexMask{0} : bit(n) - 1;
  return mask_induces_cactus(std::span<const VertexMask>(adj.data(), static_cast<std::size_t>(n)), all);
}

}  // namespace cactus
