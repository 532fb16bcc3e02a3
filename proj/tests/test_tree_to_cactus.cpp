#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "cactuskit/blocks.hpp"
#include "cactuskit/matching.hpp"
#include "cactuskit/tree_to_cactus.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cactus;
using namespace fixtures;

namespace {

// Random connected graph plus a random spanning tree of it (not necessarily BFS).
struct Instance {
  Graph g;
  std::vector<EdgeId> tree;
};

Instance random_instance(int n, int extra, std::uint64_t seed) {
  Rng rng(seed);
  Graph g = random_graph(n, extra, seed);
  // Kruskal over a shuffled edge order.
  std::vector<EdgeId> order(static_cast<std::size_t>(g.m()));
  for (EdgeId e = 0; e < g.m(); ++e) order[e] = e;
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
  std::vector<int> comp(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) comp[v] = v;
  std::vector<EdgeId> tree;
  for (EdgeId e : order) {
    const int a = comp[g.edge(e).u], b = comp[g.edge(e).v];
    if (a == b) continue;
    for (int& c : comp) {
      if (c == a) c = b;
    }
    tree.push_back(e);
  }
  return {std::move(g), std::move(tree)};
}

// Greedy that commits to whichever maximum matching the blossom search
// returns at each vertex, without checking which down-edges ancestors need.
int naive_greedy(const SpanningTree& t, const std::vector<TreePath>& paths) {
  std::vector<bool> used(static_cast<std::size_t>(t.n() - 1), false);
  std::vector<Vertex> order = t.bfs_order();
  std::reverse(order.begin(), order.end());
  int total = 0;
  for (Vertex v : order) {
    MatchingInstance inst;
    std::map<Vertex, int> node;
    auto node_of = [&](Vertex child) {
      auto [it, fresh] = node.emplace(child, inst.node_count);
      if (fresh) ++inst.node_count;
      return it->second;
    };
    for (std::size_t i = 0; i < paths.size(); ++i) {
      const auto& p = paths[i];
      if (p.lca != v) continue;
      if (std::any_of(p.edges.begin(), p.edges.end(), [&](int e) { return used[e]; })) continue;
      const auto at = std::find(p.vertices.begin(), p.vertices.end(), v) - p.vertices.begin();
      const int a = at > 0 ? node_of(p.vertices[at - 1]) : inst.node_count++;
      const int b = at + 1 < static_cast<long>(p.vertices.size()) ? node_of(p.vertices[at + 1]) : inst.node_count++;
      inst.edges.push_back({a, b, static_cast<std::int64_t>(i)});
    }
    for (int id : max_matching(inst).edge_ids) {
      for (int e : paths[static_cast<std::size_t>(inst.edges[id].tag)].edges) used[e] = true;
      ++total;
    }
  }
  return total;
}

}  // namespace

TEST(ConflictGraph, K4StarIsTriangle) {
  const Graph k4 = complete(4);
  const auto t = tree_of(k4, {{0, 1}, {0, 2}, {0, 3}});
  const auto built = build_conflict_graph(k4, t);
  ASSERT_EQ(built.conflicts.k(), 3);
  EXPECT_EQ(built.paths[0].edges, (std::vector<int>{0, 1}));
  EXPECT_EQ(built.paths[1].edges, (std::vector<int>{0, 2}));
  EXPECT_EQ(built.paths[2].edges, (std::vector<int>{1, 2}));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) EXPECT_EQ(built.conflicts.adjacent(i, j), i != j);
  }
}

TEST(ConflictGraph, DegenerateCases) {
  const Graph c5 = cycle(5);
  const auto t = tree_of(c5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  const auto built = build_conflict_graph(c5, t);
  ASSERT_EQ(built.conflicts.k(), 1);
  EXPECT_TRUE(built.conflicts.adjacency[0].empty());
  EXPECT_EQ(built.paths[0].length(), 4);

  const Graph p = path(5);
  EXPECT_EQ(build_conflict_graph(p, bfs_spanning_tree(p)).conflicts.k(), 0);
}

TEST(ConflictGraph, AdjacencyIsPathIntersection) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto inst = random_instance(9, 8, seed);
    const auto t = make_spanning_tree(inst.g, inst.tree);
    const auto built = build_conflict_graph(inst.g, t);
    for (int i = 0; i < built.conflicts.k(); ++i) {
      EXPECT_GE(built.paths[i].length(), 2);
      EXPECT_FALSE(t.is_tree_edge(built.paths[i].nontree_edge));
      for (int j = 0; j < built.conflicts.k(); ++j) {
        std::vector<int> common;
        std::set_intersection(built.paths[i].edges.begin(), built.paths[i].edges.end(),
                              built.paths[j].edges.begin(), built.paths[j].edges.end(), std::back_inserter(common));
        EXPECT_EQ(built.conflicts.adjacent(i, j), i != j && !common.empty());
      }
    }
  }
}

TEST(DisjointPaths, StarExamples) {
  const Graph g = star_with_leaf_edges(4);
  const auto t = tree_of(g, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  auto pick = [&](std::vector<std::pair<int, int>> ends) {
    std::vector<TreePath> paths;
    for (auto [a, b] : ends) paths.push_back(tree_path(t, a, b));
    return max_disjoint_paths(t, paths);
  };
  EXPECT_EQ(pick({{1, 2}, {3, 4}}).size(), 2U);
  EXPECT_EQ(pick({{1, 2}, {2, 3}, {3, 4}}).size(), 2U);
  EXPECT_EQ(pick({{1, 2}, {1, 3}, {2, 3}}).size(), 1U);
}

// The child that a higher path needs must be left exposed at the lower vertex.
TEST(DisjointPaths, GreedyRegression) {
  const Graph g = make(5, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {0, 3}});
  const auto t = tree_of(g, {{0, 1}, {1, 2}, {1, 3}, {1, 4}});
  const auto paths = nontree_paths(t);
  EXPECT_EQ(naive_greedy(t, paths), 1);
  EXPECT_EQ(max_disjoint_paths(t, paths).size(), 2U);
  EXPECT_EQ(stc_brute_force(g, t), 2);
  EXPECT_EQ(spanning_tree_to_cactus(g, t).added_count, 2);
}

TEST(Stc, Examples) {
  const Graph k4 = complete(4);
  const auto star = tree_of(k4, {{0, 1}, {0, 2}, {0, 3}});
  const auto r = spanning_tree_to_cactus(k4, star);
  EXPECT_EQ(r.added_count, 1);
  EXPECT_EQ(r.cactus_edge_count, 4);
  EXPECT_EQ(stc_brute_force(k4, star), 1);

  for (int n = 3; n <= 8; ++n) {
    const Graph c = cycle(n);
    std::vector<std::pair<int, int>> p;
    for (int v = 0; v + 1 < n; ++v) p.emplace_back(v, v + 1);
    const auto res = spanning_tree_to_cactus(c, tree_of(c, p));
    EXPECT_EQ(res.added_count, 1);
    EXPECT_EQ(res.added_edge_ids, (std::vector<EdgeId>{n - 1}));
  }

  const Graph tree = path(6);
  const auto self = bfs_spanning_tree(tree);
  EXPECT_EQ(spanning_tree_to_cactus(tree, self).added_count, 0);
  EXPECT_EQ(stc_brute_force(tree, self), 0);

  const Graph cc = cycle_chord();
  const auto cyc = tree_of(cc, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
  EXPECT_EQ(stc_brute_force(cc, cyc), 1);
  EXPECT_EQ(spanning_tree_to_cactus(cc, cyc).added_count, 1);
}

TEST(Stc, AgreesWithBruteForce) {
  int nontrivial = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int n = 3 + static_cast<int>(seed % 10);
    const int extra = std::min(max_extra(n), static_cast<int>(seed * 7 % 13));
    const auto inst = random_instance(n, extra, seed + 1000);
    const auto t = make_spanning_tree(inst.g, inst.tree);
    const auto r = spanning_tree_to_cactus(inst.g, t);
    ASSERT_EQ(r.added_count, stc_brute_force(inst.g, t)) << "seed " << seed;

    std::vector<Edge> tree_edges;
    for (EdgeId e : inst.tree) tree_edges.push_back(inst.g.edge(e));
    std::vector<std::uint64_t> masks;
    for (EdgeId e : t.non_tree_edge_ids()) {
      masks.push_back(oracle::path_mask(n, tree_edges, inst.g.edge(e).u, inst.g.edge(e).v));
    }
    ASSERT_EQ(r.added_count, oracle::max_disjoint(masks)) << "seed " << seed;
    nontrivial += r.added_count >= 2;

    std::vector<Edge> kept = tree_edges;
    for (EdgeId e : r.added_edge_ids) kept.push_back(inst.g.edge(e));
    ASSERT_TRUE(oracle::is_cactus(n, kept));
    EXPECT_EQ(r.cactus_edge_count, n - 1 + r.added_count);
  }
  EXPECT_GT(nontrivial, 50);
}

TEST(Stc, TreePlusEdgesIsCactusIffPathsDisjoint) {
  Rng rng(5);
  int cacti = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(8));
    const Graph t_only = gen_instance(GenKind::Random, n, 0, rng.below(1U << 30));
    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : t_only.edges()) pairs.emplace_back(e.u, e.v);
    const int extra = static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(4, max_extra(n)) + 1)));
    std::vector<std::pair<int, int>> all = pairs;
    while (static_cast<int>(all.size()) < n - 1 + extra) {
      const int a = static_cast<int>(rng.below(n)), b = static_cast<int>(rng.below(n));
      if (a == b) continue;
      if (std::find(all.begin(), all.end(), std::pair{a, b}) != all.end() ||
          std::find(all.begin(), all.end(), std::pair{b, a}) != all.end()) continue;
      all.emplace_back(a, b);
    }
    const Graph g = make(n, all);
    const auto t = tree_of(g, pairs);
    const auto paths = nontree_paths(t);
    bool disjoint = true;
    for (std::size_t i = 0; i < paths.size(); ++i) {
      for (std::size_t j = i + 1; j < paths.size(); ++j) disjoint &= !paths_share_edge(paths[i], paths[j]);
    }
    const bool cactus = is_cactus(g).cactus;
    cacti += cactus;
    ASSERT_EQ(cactus, disjoint) << "trial " << trial;
  }
  EXPECT_GT(cacti, 30);
  EXPECT_LT(cacti, 270);
}

TEST(Stc, AddingAnEdgeNeverHurts) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const int n = 5 + static_cast<int>(seed % 5);
    const auto inst = random_instance(n, 3, seed + 5000);
    const auto t = make_spanning_tree(inst.g, inst.tree);
    const int before = spanning_tree_to_cactus(inst.g, t).added_count;
    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : inst.g.edges()) pairs.emplace_back(e.u, e.v);
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (inst.g.find_edge(a, b)) continue;
        auto more = pairs;
        more.emplace_back(a, b);
        const Graph h = make(n, more);
        std::vector<std::pair<int, int>> tp;
        for (EdgeId e : inst.tree) tp.emplace_back(inst.g.edge(e).u, inst.g.edge(e).v);
        EXPECT_GE(spanning_tree_to_cactus(h, tree_of(h, tp)).added_count, before);
      }
    }
  }
}
