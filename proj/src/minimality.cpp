#include "cactuskit/minimality.hpp"

#include <algorithm>
#include <string>

#include "cactuskit/blocks.hpp"
#include "cactuskit/error.hpp"

namespace cactus {

bool MinimalityReport::pair_property_holds() const noexcept {
  if (!is_noncactus || !is_edge_minimal.value_or(false)) return true;
  return std::all_of(pair_cycle_table.begin(), pair_cycle_table.end(),
                     [](const PairCycleEntry& p) { return p.on_common_cycle; });
}

namespace {

struct CycleSearch {
  const Graph& g;
  Vertex start = 0;
  std::vector<bool> on_path;
  std::vector<std::uint32_t> found;

  // Paths from `start` through vertices greater than `start`.
  void extend(Vertex v, std::uint32_t edges, int length) {
    for (const auto& inc : g.adjacency(v)) {
      const std::uint32_t e = std::uint32_t{1} << inc.edge;
      if (inc.neighbor == start) {
        if (length >= 2) found.push_back(edges | e);
        continue;
      }
      if (inc.neighbor < start || on_path[static_cast<std::size_t>(inc.neighbor)]) continue;
      on_path[static_cast<std::size_t>(inc.neighbor)] = true;
      extend(inc.neighbor, edges | e, length + 1);
      on_path[static_cast<std::size_t>(inc.neighbor)] = false;
    }
  }
};

bool connected_cactus_without(const Graph& g, EdgeId drop) {
  std::vector<EdgeId> keep;
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (e != drop) keep.push_back(e);
  }
  const Graph h = edge_subgraph(g, keep);
  return is_connected(h) && is_cactus(h).cactus;
}

}  // namespace

std::vector<std::uint32_t> simple_cycles(const Graph& g) {
  if (g.m() > kMinimalityMaxEdges) {
    fail(ErrorCode::TooManyEdges, "m=" + std::to_string(g.m()) + " exceeds " + std::to_string(kMinimalityMaxEdges));
  }
  CycleSearch search{g, 0, std::vector<bool>(static_cast<std::size_t>(g.n()), false), {}};
  for (Vertex s = 0; s < g.n(); ++s) {
    search.start = s;
    search.extend(s, 0, 0);
  }
  // Each cycle is found once per direction.
  std::sort(search.found.begin(), search.found.end());
  search.found.erase(std::unique(search.found.begin(), search.found.end()), search.found.end());
  return search.found;
}

MinimalityReport check_minimal(const Graph& g) {
  if (!is_connected(g)) fail(ErrorCode::NotConnected);
  const auto cycles = simple_cycles(g);

  MinimalityReport report;
  report.is_noncactus = !is_cactus(g).cactus;
  if (report.is_noncactus) {
    report.is_edge_minimal = true;
    for (EdgeId e = 0; e < g.m(); ++e) {
      if (!connected_cactus_without(g, e)) {
        report.is_edge_minimal = false;
        report.violating_edge = e;
        break;
      }
    }
  }
  for (EdgeId e = 0; e < g.m(); ++e) {
    for (EdgeId f = e + 1; f < g.m(); ++f) {
      const std::uint32_t both = (std::uint32_t{1} << e) | (std::uint32_t{1} << f);
      const auto hit = std::find_if(cycles.begin(), cycles.end(),
                                    [both](std::uint32_t c) { return (c & both) == both; });
      PairCycleEntry entry{e, f, hit != cycles.end(), {}};
      if (entry.on_common_cycle) {
        for (EdgeId h = 0; h < g.m(); ++h) {
          if ((*hit >> h) & 1U) entry.witness_cycle.push_back(h);
        }
      }
      report.pair_cycle_table.push_back(std::move(entry));
    }
  }
  return report;
}

}  // namespace cactus
