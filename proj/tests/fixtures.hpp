#pragma once

#include <utility>
#include <vector>

#include "cactuskit/generators.hpp"
#include "cactuskit/graph.hpp"
#include "cactuskit/spanning_tree.hpp"

namespace fixtures {

using namespace cactus;

inline Graph make(int n, std::vector<std::pair<int, int>> pairs) { return build_graph(n, pairs); }

inline Graph cycle(int n) {
  std::vector<std::pair<int, int>> p;
  for (int v = 0; v < n; ++v) p.emplace_back(v, (v + 1) % n);
  return make(n, p);
}

inline Graph path(int n) {
  std::vector<std::pair<int, int>> p;
  for (int v = 0; v + 1 < n; ++v) p.emplace_back(v, v + 1);
  return make(n, p);
}

inline Graph complete(int n) { return gen_instance(GenKind::Complete, n, 0, 0); }

inline Graph triangle() { return make(3, {{0, 1}, {1, 2}, {2, 0}}); }

// Two triangles sharing vertex 2.
inline Graph bowtie() { return make(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}}); }

// 6-cycle 0..5 with chord (2,5); edge 6 is the chord.
inline Graph cycle_chord() { return make(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {2, 5}}); }

// Star at 0 plus all leaf pairs; leaves 1..k.
inline Graph star_with_leaf_edges(int k) {
  std::vector<std::pair<int, int>> p;
  for (int v = 1; v <= k; ++v) p.emplace_back(0, v);
  for (int u = 1; u <= k; ++u) {
    for (int v = u + 1; v <= k; ++v) p.emplace_back(u, v);
  }
  return make(k + 1, p);
}

inline Graph petersen() {
  return make(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                   {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                   {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

inline SpanningTree tree_of(const Graph& g, std::vector<std::pair<int, int>> pairs) {
  return validate_spanning_tree(g, pairs);
}

// Random connected graph with n vertices and `extra` non-tree edges.
inline Graph random_graph(int n, int extra, std::uint64_t seed) { return gen_instance(GenKind::Random, n, extra, seed); }

inline int max_extra(int n) { return n * (n - 1) / 2 - (n - 1); }

}  // namespace fixtures
