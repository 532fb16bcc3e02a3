#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cactuskit/graph.hpp"

namespace cactus {

inline constexpr int kMinimalityMaxEdges = 20;

struct PairCycleEntry {
  EdgeId first = -1;
  EdgeId second = -1;
  bool on_common_cycle = false;
  std::vector<EdgeId> witness_cycle;  // edge ids of one common cycle, ascending
};

struct MinimalityReport {
  bool is_noncactus = false;
  // Set only for non-cacti: true iff G - e is a cactus for every edge e
  // (a disconnected G - e counts as not a cactus).
  std::optional<bool> is_edge_minimal;
  std::optional<EdgeId> violating_edge;  // first e with G - e still a non-cactus
  std::vector<PairCycleEntry> pair_cycle_table;  // every pair e < f

  // Every pair on a common cycle whenever G is an edge-minimal non-cactus.
  bool pair_property_holds() const noexcept;
};

// Simple cycles as edge bitmasks, ascending. m <= 20; throws TooManyEdges.
std::vector<std::uint32_t> simple_cycles(const Graph& g);

// Throws NotConnected / TooManyEdges.
MinimalityReport check_minimal(const Graph& g);

}  // namespace cactus
