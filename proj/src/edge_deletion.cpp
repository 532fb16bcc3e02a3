#include "cactuskit/edge_deletion.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "cactuskit/blocks.hpp"
#include "cactuskit/error.hpp"
#include "cactuskit/spanning_trees.hpp"
#include "cactuskit/tree_to_cactus.hpp"

namespace cactus {

std::string_view to_string(EdcAlgorithm algo) noexcept {
  switch (algo) {
    case EdcAlgorithm::SubsetDp: return "dp";
    case EdcAlgorithm::TreeEnum: return "enum";
    case EdcAlgorithm::Brute: return "brute";
  }
  return "?";
}

std::uint64_t EdcStats::work(EdcAlgorithm algo) const noexcept {
  switch (algo) {
    case EdcAlgorithm::SubsetDp: return subsets_evaluated;
    case EdcAlgorithm::TreeEnum: return trees_enumerated;
    case EdcAlgorithm::Brute: return edge_subsets_tried;
  }
  return 0;
}

void check_spanning_cactus(const Graph& g, const std::vector<EdgeId>& kept) {
  const Graph h = edge_subgraph(g, kept);
  if (!is_connected(h) || !is_cactus(h).cactus) {
    fail(ErrorCode::InternalError, "kept edges are not a connected spanning cactus");
  }
}

EdcResult edc_subset_dp(const Graph& g, const DpOptions& options) {
  if (!is_connected(g)) fail(ErrorCode::NotConnected);
  DpStats dp_stats;
  const SubsetTable table = build_subset_table(g, options, &dp_stats);
  EdcResult r;
  r.algorithm = EdcAlgorithm::SubsetDp;
  r.stats.subsets_evaluated = dp_stats.subsets_evaluated;
  r.stats.splits_examined = dp_stats.splits_examined;
  const int best = table.value(g.all_vertices());
  r.deleted_count = g.m() - best;
  if (options.fault != DpFault::None) {
    // A faulty recurrence has no trustworthy witness; report the count only.
    return r;
  }
  r.kept_edge_ids = reconstruct_cactus(g, table, g.all_vertices());
  if (static_cast<int>(r.kept_edge_ids.size()) != best) {
    fail(ErrorCode::InternalError, "reconstructed cactus size differs from I(V)");
  }
  check_spanning_cactus(g, r.kept_edge_ids);
  return r;
}

EdcResult edc_tree_enum(const Graph& g, std::uint64_t max_trees) {
  if (!is_connected(g)) fail(ErrorCode::NotConnected);
  const BigInt tau = count_spanning_trees(g);
  if (tau > max_trees) {
    std::ostringstream msg;
    msg << "tau(G)=" << tau << " exceeds limit " << max_trees;
    fail(ErrorCode::TooManyTrees, msg.str());
  }
  EdcResult r;
  r.algorithm = EdcAlgorithm::TreeEnum;
  int best = -1;
  const auto stats = enumerate_spanning_trees(
      g,
      [&](const SpanningTree& t) {
        const auto paths = nontree_paths(t);
        const auto chosen = max_disjoint_paths(t, paths);
        if (static_cast<int>(chosen.size()) <= best) return;
        best = static_cast<int>(chosen.size());
        r.kept_edge_ids = t.tree_edge_ids();
        for (int idx : chosen) r.kept_edge_ids.push_back(paths[static_cast<std::size_t>(idx)].nontree_edge);
      },
      max_trees);
  std::sort(r.kept_edge_ids.begin(), r.kept_edge_ids.end());
  r.stats.trees_enumerated = stats.trees_visited;
  r.deleted_count = g.m() - static_cast<int>(r.kept_edge_ids.size());
  check_spanning_cactus(g, r.kept_edge_ids);
  return r;
}

EdcResult edc_brute_force(const Graph& g) {
  if (!is_connected(g)) fail(ErrorCode::NotConnected);
  const int m = g.m();
  if (m > kBruteMaxEdges) fail(ErrorCode::TooManyEdges, "m=" + std::to_string(m) + " (cap 20)");
  if (g.n() > kMaskBits) fail(ErrorCode::TooManyVertices);
  const int n = g.n();
  EdcResult r;
  r.algorithm = EdcAlgorithm::Brute;
  const std::uint32_t all = (std::uint32_t{1} << m) - 1;
  std::vector<Edge> chosen;
  // No size bound is assumed: every subset size from m down is examined.
  for (int target = m; target >= n - 1; --target) {
    for (std::uint32_t s = 0; s <= all; ++s) {
      if (std::popcount(s) != target) continue;
      ++r.stats.edge_subsets_tried;
      chosen.clear();
      for (std::uint32_t rest = s; rest; rest &= rest - 1) chosen.push_back(g.edge(std::countr_zero(rest)));
      if (!edges_form_spanning_cactus(n, chosen)) continue;
      for (std::uint32_t rest = s; rest; rest &= rest - 1) r.kept_edge_ids.push_back(std::countr_zero(rest));
      r.deleted_count = m - target;
      check_spanning_cactus(g, r.kept_edge_ids);
      return r;
    }
  }
  fail(ErrorCode::InternalError, "connected graph without a spanning cactus");
}

}  // namespace cactus
