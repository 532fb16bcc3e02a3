#include <gtest/gtest.h>

#include <set>

#include "cactuskit/error.hpp"
#include "cactuskit/generators.hpp"
#include "cactuskit/matching.hpp"
#include "oracles.hpp"

using namespace cactus;

namespace {

MatchingInstance instance(int nodes, const std::vector<std::pair<int, int>>& pairs) {
  MatchingInstance inst;
  inst.node_count = nodes;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    inst.edges.push_back({pairs[i].first, pairs[i].second, static_cast<std::int64_t>(i)});
  }
  return inst;
}

void expect_valid(const MatchingInstance& inst, const Matching& m) {
  std::set<int> used;
  for (int id : m.edge_ids) {
    EXPECT_TRUE(used.insert(inst.edges[id].a).second);
    EXPECT_TRUE(used.insert(inst.edges[id].b).second);
  }
}

std::vector<std::pair<int, int>> random_pairs(int nodes, Rng& rng) {
  std::vector<std::pair<int, int>> out;
  const auto density = rng.below(100);
  for (int a = 0; a < nodes; ++a) {
    for (int b = a + 1; b < nodes; ++b) {
      if (rng.below(100) < density) out.emplace_back(a, b);
    }
  }
  return out;
}

}  // namespace

TEST(Matching, SmallExamples) {
  EXPECT_EQ(max_matching(instance(4, {{0, 1}, {1, 2}, {2, 3}})).size(), 2);
  EXPECT_EQ(max_matching(instance(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}})).size(), 2);
  EXPECT_EQ(max_matching(instance(0, {})).size(), 0);
  EXPECT_EQ(brute_matching(instance(3, {{0, 1}, {1, 2}, {2, 0}})), 1);
  EXPECT_EQ(brute_matching(instance(0, {})), 0);
  EXPECT_EQ(brute_matching(instance(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})), 2);
}

TEST(Matching, Petersen) {
  const auto inst = instance(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7},
                                  {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  const auto m = max_matching(inst);
  EXPECT_EQ(m.size(), 5);
  expect_valid(inst, m);
  EXPECT_EQ(brute_matching(inst), 5);
}

TEST(Matching, NeedsBlossomContraction) {
  // Two triangles joined through a path: greedy augmentation without
  // shrinking the odd cycles misses the perfect matching.
  const auto inst = instance(8, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 5}});
  EXPECT_EQ(max_matching(inst).size(), 4);
}

TEST(Matching, RejectsBadInstances) {
  EXPECT_THROW(max_matching(instance(2, {{0, 0}})), Error);
  EXPECT_THROW(max_matching(instance(2, {{0, 1}, {1, 0}})), Error);
  EXPECT_THROW(max_matching(instance(2, {{0, 2}})), Error);
  std::vector<std::pair<int, int>> many;
  for (int i = 0; i < 21; ++i) many.emplace_back(i, i + 21);
  try {
    brute_matching(instance(42, many));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLargeForOracle);
  }
}

TEST(Matching, AgreesWithOracles) {
  Rng rng(2024);
  for (int trial = 0; trial < 400; ++trial) {
    const int nodes = 1 + static_cast<int>(rng.below(12));
    const auto pairs = random_pairs(nodes, rng);
    const auto inst = instance(nodes, pairs);
    const auto m = max_matching(inst);
    expect_valid(inst, m);
    const int expected = oracle::matching(nodes, pairs);
    ASSERT_EQ(m.size(), expected) << "trial " << trial;
    if (pairs.size() <= 20) ASSERT_EQ(brute_matching(inst), expected);
  }
}

TEST(Matching, ExposableNodesAndAvoidance) {
  Rng rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const int nodes = 1 + static_cast<int>(rng.below(10));
    const auto pairs = random_pairs(nodes, rng);
    const auto inst = instance(nodes, pairs);
    const int best = oracle::matching(nodes, pairs);
    const auto always = always_matched_nodes(inst);
    for (int v = 0; v < nodes; ++v) {
      std::vector<std::pair<int, int>> without;
      for (auto [a, b] : pairs) {
        if (a != v && b != v) without.push_back({a, b});
      }
      const bool exposable = oracle::matching(nodes, without) == best;
      ASSERT_EQ(!always[v], exposable) << "trial " << trial << " node " << v;
      if (exposable) {
        const auto m = max_matching_avoiding(inst, v);
        expect_valid(inst, m);
        ASSERT_EQ(m.size(), best);
        for (int id : m.edge_ids) ASSERT_TRUE(inst.edges[id].a != v && inst.edges[id].b != v);
      }
    }
  }
}
