#include "cactuskit/generators.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "cactuskit/blocks.hpp"
#include "cactuskit/error.hpp"

namespace cactus {

std::optional<GenKind> parse_gen_kind(std::string_view name) {
  if (name == "random") return GenKind::Random;
  if (name == "cactus-plus") return GenKind::CactusPlus;
  if (name == "complete") return GenKind::Complete;
  if (name == "cycle-chord") return GenKind::CycleChord;
  return std::nullopt;
}

std::string_view to_string(GenKind kind) noexcept {
  switch (kind) {
    case GenKind::Random: return "random";
    case GenKind::CactusPlus: return "cactus-plus";
    case GenKind::Complete: return "complete";
    case GenKind::CycleChord: return "cycle-chord";
  }
  return "?";
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t reject_from = std::mt19937_64::max() - std::mt19937_64::max() % bound;
  std::uint64_t x = 0;
  do {
    x = engine_();
  } while (x >= reject_from);
  return x % bound;
}

std::vector<Edge> decode_pruefer(int n, const std::vector<int>& sequence) {
  std::vector<Edge> edges;
  if (n < 2) return edges;
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int v : sequence) ++degree[static_cast<std::size_t>(v)];
  for (int v : sequence) {
    int leaf = 0;
    while (degree[static_cast<std::size_t>(leaf)] != 1) ++leaf;
    edges.push_back({leaf, v});
    --degree[static_cast<std::size_t>(leaf)];
    --degree[static_cast<std::size_t>(v)];
  }
  int a = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[static_cast<std::size_t>(v)] != 1) continue;
    if (a < 0) {
      a = v;
    } else {
      edges.push_back({a, v});
      break;
    }
  }
  return edges;
}

namespace {

using PairSet = std::set<std::pair<Vertex, Vertex>>;

std::pair<Vertex, Vertex> key(Vertex u, Vertex v) { return {std::min(u, v), std::max(u, v)}; }

void add_noise(int n, int extra, std::vector<Edge>& edges, Rng& rng) {
  if (extra < 0) fail(ErrorCode::InfeasibleParams, "negative extra edge count");
  PairSet present;
  for (const auto& e : edges) present.insert(key(e.u, e.v));
  std::vector<std::pair<Vertex, Vertex>> candidates;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!present.count({u, v})) candidates.emplace_back(u, v);
    }
  }
  if (static_cast<std::size_t>(extra) > candidates.size()) {
    fail(ErrorCode::InfeasibleParams,
         std::to_string(extra) + " extra edges requested, only " + std::to_string(candidates.size()) + " free pairs");
  }
  for (int i = 0; i < extra; ++i) {
    const auto j = static_cast<std::size_t>(i) + rng.below(candidates.size() - static_cast<std::size_t>(i));
    std::swap(candidates[static_cast<std::size_t>(i)], candidates[j]);
    edges.push_back({candidates[static_cast<std::size_t>(i)].first, candidates[static_cast<std::size_t>(i)].second});
  }
}

std::vector<Edge> random_tree(int n, Rng& rng) {
  std::vector<int> seq;
  for (int i = 0; i + 2 < n; ++i) seq.push_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
  return decode_pruefer(n, seq);
}

std::vector<Edge> random_cactus(int n, Rng& rng) {
  std::vector<Edge> edges;
  int count = 1;
  while (count < n) {
    const auto at = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(count)));
    const int remaining = n - count;
    if (remaining < 2 || rng.coin()) {
      edges.push_back({at, count++});
      continue;
    }
    const int max_len = std::min(6, remaining + 1);
    const int len = 3 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_len - 2)));
    Vertex prev = at;
    for (int i = 0; i < len - 1; ++i) {
      edges.push_back({prev, count});
      prev = count++;
    }
    edges.push_back({prev, at});
  }
  return edges;
}

}  // namespace

Graph gen_instance(GenKind kind, int n, int extra_edges, std::uint64_t seed) {
  if (n < 1) fail(ErrorCode::InfeasibleParams, "n must be >= 1");
  Rng rng(seed);
  std::vector<Edge> edges;
  switch (kind) {
    case GenKind::Random:
      edges = random_tree(n, rng);
      break;
    case GenKind::CactusPlus:
      edges = random_cactus(n, rng);
      break;
    case GenKind::Complete:
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
      }
      break;
    case GenKind::CycleChord:
      if (n < 4) fail(ErrorCode::InfeasibleParams, "cycle-chord needs n >= 4");
      for (Vertex v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
      edges.push_back({n / 2 - 1, n - 1});
      break;
  }
  add_noise(n, extra_edges, edges, rng);
  return Graph(n, std::move(edges));
}

namespace {

bool connected_noncactus(const Graph& g) {
  return is_connected(g) && !is_cactus(g).cactus;
}

Graph without_edge(const Graph& g, EdgeId drop) {
  std::vector<EdgeId> keep;
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (e != drop) keep.push_back(e);
  }
  return edge_subgraph(g, keep);
}

}  // namespace

Graph gen_minimal_noncactus(int n, std::uint64_t seed) {
  if (n < 4) fail(ErrorCode::InfeasibleParams, "a non-cactus needs at least 4 vertices");
  Rng rng(seed);
  // Few extra edges keep the surviving block large.
  const int max_extra = n * (n - 1) / 2 - (n - 1);
  Graph g;
  do {
    const int extra = std::min(max_extra, 2 + static_cast<int>(rng.below(2)));
    g = gen_instance(GenKind::Random, n, extra, rng.below(~std::uint64_t{0}));
  } while (!connected_noncactus(g));

  while (true) {
    std::vector<EdgeId> removable;
    for (EdgeId e = 0; e < g.m(); ++e) {
      if (connected_noncactus(without_edge(g, e))) removable.push_back(e);
    }
    if (removable.empty()) break;
    g = without_edge(g, removable[rng.below(removable.size())]);
  }

  const auto blocks = biconnected_blocks(g);
  for (const auto& b : blocks.blocks) {
    if (b.kind != BlockKind::Other) continue;
    VertexMask verts = 0;
    for (EdgeId e : b.edges) verts |= bit(g.edge(e).u) | bit(g.edge(e).v);
    return induced_subgraph(g, verts).graph;
  }
  fail(ErrorCode::InternalError, "thinned graph lost its non-cactus block");
}

}  // namespace cactus
