#include <gtest/gtest.h>

#include <algorithm>

#include "cactuskit/blocks.hpp"
#include "cactuskit/edge_deletion.hpp"
#include "cactuskit/error.hpp"
#include "cactuskit/subset_dp.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cactus;
using namespace fixtures;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InternalError;
}

VertexMask mask(std::initializer_list<int> vs) {
  VertexMask m = 0;
  for (int v : vs) m |= bit(v);
  return m;
}

int bound(int k) { return 3 * (k - 1) / 2; }

void expect_spanning_cactus(const Graph& g, const EdcResult& r) {
  std::vector<Edge> kept;
  for (EdgeId e : r.kept_edge_ids) kept.push_back(g.edge(e));
  EXPECT_TRUE(oracle::is_cactus(g.n(), kept));
  EXPECT_EQ(r.deleted_count, g.m() - static_cast<int>(r.kept_edge_ids.size()));
  EXPECT_TRUE(std::is_sorted(r.kept_edge_ids.begin(), r.kept_edge_ids.end()));
}

Graph random_connected(int n, std::uint64_t seed) {
  Rng rng(seed);
  const int cap = std::min(max_extra(n), 20 - (n - 1));
  return random_graph(n, static_cast<int>(rng.below(static_cast<std::uint64_t>(cap + 1))), seed);
}

}  // namespace

TEST(BaseCase, Examples) {
  const Graph k4 = complete(4);
  EXPECT_EQ(base_case_I(k4, mask({2})).value, 0);
  EXPECT_EQ(base_case_I(k4, mask({0, 1, 2})).value, 3);
  const auto all = base_case_I(k4, k4.all_vertices());
  EXPECT_EQ(all.value, 4);
  EXPECT_EQ(all.kept.size(), 4U);
  const Graph k5 = complete(5);
  EXPECT_EQ(base_case_I(k5, k5.all_vertices()).value, 6);
  EXPECT_EQ(code_of([] { base_case_I(complete(6), complete(6).all_vertices()); }), ErrorCode::SubsetTooLarge);
  EXPECT_EQ(code_of([] { base_case_I(path(4), mask({0, 2})); }), ErrorCode::NotConnectedSubset);
}

TEST(BaseCase, MatchesOracleOnAllSmallSubsets) {
  const Graph g = random_graph(7, 9, 3);
  for (VertexMask x = 1; x <= g.all_vertices(); ++x) {
    if (std::popcount(x) > kBaseCaseMaxVertices || !mask_is_connected(g.neighbor_masks(), x)) continue;
    const auto sub = induced_subgraph(g, x);
    const auto r = base_case_I(g, x);
    ASSERT_EQ(sub.graph.m() - r.value, oracle::edc(sub.graph)) << x;
  }
}

TEST(FindCutCactus, Examples) {
  const Graph bt = bowtie();
  const auto t1 = build_subset_table(bt, {});
  EXPECT_EQ(find_cut_cactus(2, mask({0, 1}), bt.all_vertices(), t1), 6);

  const Graph cc = cycle_chord();
  const auto t2 = build_subset_table(cc, {});
  EXPECT_EQ(find_cut_cactus(5, mask({1, 2, 3, 4}), cc.all_vertices(), t2), 6);
  EXPECT_EQ(find_cut_cactus(5, mask({0, 1, 2, 3}), cc.all_vertices(), t2), 6);
  EXPECT_EQ(t2.value(mask({1, 2, 3, 4, 5})), 5);

  const Graph p7 = path(7);
  const auto t3 = build_subset_table(p7, {});
  EXPECT_EQ(find_cut_cactus(3, mask({0, 1, 2}), p7.all_vertices(), t3), 6);

  EXPECT_EQ(code_of([&] { find_cut_cactus(3, 0, p7.all_vertices(), t3); }), ErrorCode::PreconditionViolated);
  EXPECT_EQ(code_of([&] { find_cut_cactus(3, mask({0, 2}), p7.all_vertices(), t3); }), ErrorCode::PreconditionViolated);
  EXPECT_EQ(code_of([&] { find_cut_cactus(3, mask({0, 1, 2, 4, 5, 6}), p7.all_vertices(), t3); }),
            ErrorCode::PreconditionViolated);
}

TEST(FindMaxCactus, Examples) {
  const Graph host = make(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {5, 6}, {6, 7}, {7, 0}, {2, 6}});
  SubsetTable t(host.n());
  const VertexMask hex = mask({0, 1, 2, 3, 4, 5});
  EXPECT_EQ(find_max_cactus(hex, host, t), 6);
  EXPECT_EQ(t.kind(hex), EntryKind::CactusShortcut);

  const Graph cc = cycle_chord();
  SubsetTable tf(cc.n());
  EXPECT_EQ(find_max_cactus(cc.all_vertices(), cc, tf), 6);
  EXPECT_EQ(tf.kind(cc.all_vertices()), EntryKind::Split);

  const Graph k6 = complete(6);
  SubsetTable tk(6);
  EXPECT_EQ(find_max_cactus(k6.all_vertices(), k6, tk), 7);
  EXPECT_EQ(code_of([&] { find_max_cactus(mask({0, 2}), path(4), tk); }), ErrorCode::NotConnectedSubset);
}

TEST(SubsetTable, KernelsProduceIdenticalTables) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 4 + static_cast<int>(seed % 9);
    const Graph g = random_graph(n, std::min(max_extra(n), n + static_cast<int>(seed % 5)), seed);
    const auto serial = build_subset_table(g, {});
    for (int threads : {1, 2, 4}) {
      DpOptions par;
      par.kernel = DpKernel::Parallel;
      par.threads = threads;
      ASSERT_TRUE(serial == build_subset_table(g, par)) << seed;
    }
    DpOptions td;
    td.kernel = DpKernel::TopDown;
    const auto top = build_subset_table(g, td);
    EXPECT_EQ(top.value(g.all_vertices()), serial.value(g.all_vertices()));
    for (VertexMask x = 1; x <= g.all_vertices(); ++x) {
      if (top.is_final(x)) ASSERT_EQ(top.value(x), serial.value(x));
    }
  }
}

TEST(SubsetTable, EntriesRespectBoundsAndSplitDomain) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 6 + static_cast<int>(seed % 4);
    const Graph g = random_graph(n, std::min(max_extra(n), 2 + static_cast<int>(seed % 10)), seed + 77);
    const auto& adj = g.neighbor_masks();
    const auto t = build_subset_table(g, {});
    for (VertexMask x = 1; x <= g.all_vertices(); ++x) {
      const bool conn = mask_is_connected(adj, x);
      ASSERT_EQ(t.is_final(x), conn);
      if (!conn) continue;
      const int k = std::popcount(x);
      const int edges = induced_edge_count(adj, x);
      EXPECT_GE(t.value(x), k - 1);
      EXPECT_LE(t.value(x), std::min(edges, bound(k)));
      if (t.kind(x) != EntryKind::Split) continue;
      const auto w = t.split(x);
      const VertexMask a = w.part, b = x & ~a & ~bit(w.cut);
      EXPECT_NE(a, 0U);
      EXPECT_NE(b, 0U);
      EXPECT_TRUE(mask_is_connected(adj, a | bit(w.cut)));
      EXPECT_TRUE(mask_is_connected(adj, b | bit(w.cut)));
      EXPECT_GE(std::popcount(adj[w.cut] & x), 2);
      EXPECT_EQ(t.value(x), t.value(a | bit(w.cut)) + t.value(b | bit(w.cut)));

      // Gluing the part witnesses at the cut vertex gives a cactus with that cut vertex.
      auto left = reconstruct_cactus(g, t, a | bit(w.cut));
      const auto right = reconstruct_cactus(g, t, b | bit(w.cut));
      const auto sub = induced_subgraph(g, x);
      std::vector<EdgeId> glued;
      for (EdgeId e : left) glued.push_back(sub.from_host_edge[e]);
      for (EdgeId e : right) glued.push_back(sub.from_host_edge[e]);
      const Graph h = edge_subgraph(sub.graph, glued);
      const auto verdict = is_cactus(h);
      ASSERT_TRUE(verdict.cactus);
      const auto& cuts = verdict.witness.cut_vertices;
      EXPECT_TRUE(std::binary_search(cuts.begin(), cuts.end(), sub.from_host_vertex[w.cut]));
    }
  }
}

// Checked rather than assumed: the maximum spanning cactus of K_k has
// floor(3(k-1)/2) edges.
TEST(SubsetTable, CompleteGraphBoundIsTight) {
  for (int k = 2; k <= 6; ++k) {
    const auto r = edc_brute_force(complete(k));
    EXPECT_EQ(complete(k).m() - r.deleted_count, bound(k)) << k;
  }
  for (int k = 3; k <= 5; ++k) EXPECT_EQ(base_case_I(complete(k), complete(k).all_vertices()).value, bound(k));
  EXPECT_EQ(oracle::edc(complete(5)), 10 - 6);
}

TEST(Edc, Examples) {
  const Graph cc = cycle_chord();
  const Graph k4 = complete(4);
  for (const auto& r : {edc_subset_dp(cc), edc_tree_enum(cc), edc_brute_force(cc)}) {
    EXPECT_EQ(r.deleted_count, 1) << to_string(r.algorithm);
    EXPECT_EQ(r.kept_edge_ids.size(), 6U);
    expect_spanning_cactus(cc, r);
  }
  for (const auto& r : {edc_subset_dp(k4), edc_tree_enum(k4), edc_brute_force(k4)}) {
    EXPECT_EQ(r.deleted_count, 2) << to_string(r.algorithm);
    expect_spanning_cactus(k4, r);
  }
  EXPECT_EQ(oracle::edc(k4), 2);
  EXPECT_EQ(oracle::edc(cc), 1);
  EXPECT_EQ(edc_subset_dp(bowtie()).deleted_count, 0);
  EXPECT_EQ(edc_brute_force(triangle()).deleted_count, 0);
  EXPECT_EQ(edc_tree_enum(make(1, {})).deleted_count, 0);
  EXPECT_EQ(edc_subset_dp(make(1, {})).deleted_count, 0);
}

TEST(Edc, CactusInputsNeedNoDeletion) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = gen_instance(GenKind::CactusPlus, 3 + static_cast<int>(seed % 12), 0, seed);
    EXPECT_EQ(edc_subset_dp(g).deleted_count, 0);
    EXPECT_EQ(edc_tree_enum(g).deleted_count, 0);
  }
}

TEST(Edc, LimitsAndErrors) {
  const Graph k8 = complete(8);
  try {
    edc_tree_enum(k8, 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooManyTrees);
    EXPECT_NE(std::string(e.what()).find("tau(G)=262144"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("1000"), std::string::npos);
  }
  EXPECT_EQ(code_of([] { edc_brute_force(complete(7)); }), ErrorCode::TooManyEdges);
  DpOptions small;
  small.max_n = 7;
  EXPECT_EQ(code_of([&] { edc_subset_dp(k8, small); }), ErrorCode::TooManyVertices);
  const Graph split = make(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(code_of([&] { edc_subset_dp(split); }), ErrorCode::NotConnected);
  EXPECT_EQ(code_of([&] { edc_tree_enum(split); }), ErrorCode::NotConnected);
  EXPECT_EQ(code_of([&] { edc_brute_force(split); }), ErrorCode::NotConnected);
  EXPECT_EQ(code_of([&] { check_spanning_cactus(complete(4), {0, 1, 2, 3, 4, 5}); }), ErrorCode::InternalError);
}

TEST(Edc, ThreeWayAgreementWithOracle) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const int n = 4 + static_cast<int>(seed % 5);
    const Graph g = random_connected(n, seed);
    const auto dp = edc_subset_dp(g);
    const auto en = edc_tree_enum(g);
    const auto br = edc_brute_force(g);
    ASSERT_EQ(dp.deleted_count, en.deleted_count) << seed;
    ASSERT_EQ(dp.deleted_count, br.deleted_count) << seed;
    expect_spanning_cactus(g, dp);
    expect_spanning_cactus(g, en);
    expect_spanning_cactus(g, br);
    if (g.m() <= 12) ASSERT_EQ(dp.deleted_count, oracle::edc(g)) << seed;
  }
}

TEST(Edc, KernelsAgreeOnLargerGraphs) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Graph g = random_graph(13, 14, seed);
    DpOptions par;
    par.kernel = DpKernel::Parallel;
    DpOptions td;
    td.kernel = DpKernel::TopDown;
    const int serial = edc_subset_dp(g).deleted_count;
    EXPECT_EQ(edc_subset_dp(g, par).deleted_count, serial);
    EXPECT_EQ(edc_subset_dp(g, td).deleted_count, serial);
  }
}

// Some optimal spanning cactus of a non-cactus graph on at least five
// vertices has a cut vertex.
TEST(Edc, SomeOptimumHasCutVertex) {
  int checked = 0;
  for (std::uint64_t seed = 0; checked < 100; ++seed) {
    const int n = 5 + static_cast<int>(seed % 4);
    const Graph g = random_connected(n, seed + 900);
    if (is_cactus(g).cactus || g.m() > 16) continue;
    ++checked;
    const int keep = g.m() - edc_brute_force(g).deleted_count;
    bool found = false;
    for (std::uint32_t s = 0; s < (1U << g.m()) && !found; ++s) {
      if (std::popcount(s) != keep) continue;
      std::vector<EdgeId> ids;
      for (EdgeId e = 0; e < g.m(); ++e) {
        if ((s >> e) & 1U) ids.push_back(e);
      }
      const Graph h = edge_subgraph(g, ids);
      if (!is_connected(h)) continue;
      const auto v = is_cactus(h);
      found = v.cactus && !v.witness.cut_vertices.empty();
    }
    EXPECT_TRUE(found) << "seed " << seed;
  }
}

TEST(Faults, MissingConnectivityCheckOnBIsHarmless) {
  // With B + x disconnected the split scores I(A + x), and a cactus on A + x
  // extends by bridges to one on X, so the optimum never moves.
  DpOptions faulty;
  faulty.fault = DpFault::SkipBConnectivity;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const int n = 4 + static_cast<int>(seed % 6);
    const Graph g = random_connected(n, seed + 3000);
    ASSERT_EQ(edc_subset_dp(g, faulty).deleted_count, edc_subset_dp(g).deleted_count) << seed;
  }
}

TEST(Faults, EdgeBoundShortcutIsWrong) {
  DpOptions faulty;
  faulty.fault = DpFault::CactusShortcutByEdgeBound;
  int wrong = 0;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const int n = 6 + static_cast<int>(seed % 3);
    const Graph g = random_connected(n, seed + 4000);
    wrong += edc_subset_dp(g, faulty).deleted_count != edc_brute_force(g).deleted_count;
  }
  EXPECT_GT(wrong, 0);
}
