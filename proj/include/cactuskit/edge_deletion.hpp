#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "cactuskit/graph.hpp"
#include "cactuskit/subset_dp.hpp"

namespace cactus {

enum class EdcAlgorithm { SubsetDp, TreeEnum, Brute };

std::string_view to_string(EdcAlgorithm algo) noexcept;

struct EdcStats {
  std::uint64_t subsets_evaluated = 0;   // dp
  std::uint64_t splits_examined = 0;     // dp
  std::uint64_t trees_enumerated = 0;    // enum
  std::uint64_t edge_subsets_tried = 0;  // brute

  // The single work counter reported for the algorithm that ran.
  std::uint64_t work(EdcAlgorithm algo) const noexcept;
};

// Minimum edge deletion to a spanning cactus H = (V, kept).
struct EdcResult {
  int deleted_count = 0;
  std::vector<EdgeId> kept_edge_ids;  // ascending
  EdcAlgorithm algorithm = EdcAlgorithm::SubsetDp;
  EdcStats stats;
};

inline constexpr std::uint64_t kDefaultMaxTrees = 10'000'000;
inline constexpr int kBruteMaxEdges = 20;

// O*(3^n) subset dynamic program. Throws NotConnected / TooManyVertices.
EdcResult edc_subset_dp(const Graph& g, const DpOptions& options = {});

// Best tree-to-cactus value over every spanning tree. Throws NotConnected,
// or TooManyTrees before enumerating when tau(G) > max_trees.
EdcResult edc_tree_enum(const Graph& g, std::uint64_t max_trees = kDefaultMaxTrees);

// Edge subsets largest first; m <= 20. Throws TooManyEdges.
EdcResult edc_brute_force(const Graph& g);

// Throws InternalError unless `kept` spans g as a connected cactus.
void check_spanning_cactus(const Graph& g, const std::vector<EdgeId>& kept);

}  // namespace cactus
