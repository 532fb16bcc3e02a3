#include "cactuskit/subset_dp.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <exception>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cactuskit/blocks.hpp"
#include "cactuskit/error.hpp"

namespace cactus {

SubsetTable::SubsetTable(int n) : n_(n) {
  if (n < 0 || n > kDpHardMaxVertices) fail(ErrorCode::TooManyVertices, "subset table n=" + std::to_string(n));
  const std::size_t size = std::size_t{1} << n;
  values_.assign(size, -1);
  cuts_.assign(size, 0);
  parts_.assign(size, 0);
}

EntryKind SubsetTable::kind(VertexMask x) const {
  if (!is_final(x)) return EntryKind::Unset;
  switch (cuts_[static_cast<std::size_t>(x)]) {
    case kBaseTag: return EntryKind::Base;
    case kCactusTag: return EntryKind::CactusShortcut;
    default: return EntryKind::Split;
  }
}

SplitWitness SubsetTable::split(VertexMask x) const {
  if (kind(x) != EntryKind::Split) return {};
  return {cuts_[static_cast<std::size_t>(x)], parts_[static_cast<std::size_t>(x)]};
}

void SubsetTable::set_base(VertexMask x, int value) {
  values_[static_cast<std::size_t>(x)] = static_cast<std::int8_t>(value);
  cuts_[static_cast<std::size_t>(x)] = kBaseTag;
}

void SubsetTable::set_cactus(VertexMask x, int value) {
  values_[static_cast<std::size_t>(x)] = static_cast<std::int8_t>(value);
  cuts_[static_cast<std::size_t>(x)] = kCactusTag;
}

void SubsetTable::set_split(VertexMask x, int value, Vertex cut, VertexMask part) {
  values_[static_cast<std::size_t>(x)] = static_cast<std::int8_t>(value);
  cuts_[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(cut);
  parts_[static_cast<std::size_t>(x)] = static_cast<std::uint32_t>(part);
}

namespace {

// Largest spanning-cactus edge count on k vertices.
constexpr int cactus_edge_bound(int k) { return k <= 1 ? 0 : 3 * (k - 1) / 2; }

struct LocalBase {
  int value = -1;
  std::uint32_t best_subset = 0;
  int edge_count = 0;
  std::array<Edge, 10> host_edges{};  // host vertex ids
};

LocalBase solve_base(std::span<const VertexMask> adj, VertexMask subset) {
  std::array<int, kMaskBits> local{};
  int k = 0;
  for (VertexMask r = subset; r; r &= r - 1) local[static_cast<std::size_t>(std::countr_zero(r))] = k++;

  LocalBase out;
  std::array<Edge, 10> local_edges{};
  for (VertexMask r = subset; r; r &= r - 1) {
    const int u = std::countr_zero(r);
    for (VertexMask nb = adj[static_cast<std::size_t>(u)] & subset & ~(bit(u + 1) - 1); nb; nb &= nb - 1) {
      const int v = std::countr_zero(nb);
      out.host_edges[static_cast<std::size_t>(out.edge_count)] = {u, v};
      local_edges[static_cast<std::size_t>(out.edge_count)] = {local[static_cast<std::size_t>(u)],
                                                              local[static_cast<std::size_t>(v)]};
      ++out.edge_count;
    }
  }
  const int m = out.edge_count;
  const std::uint32_t all = (std::uint32_t{1} << m) - 1;
  std::array<Edge, 10> chosen{};
  for (int target = std::min(m, cactus_edge_bound(k)); target >= k - 1; --target) {
    for (std::uint32_t s = 0; s <= all; ++s) {
      if (std::popcount(s) != target) continue;
      int c = 0;
      for (std::uint32_t r = s; r; r &= r - 1) chosen[static_cast<std::size_t>(c++)] = local_edges[static_cast<std::size_t>(std::countr_zero(r))];
      if (edges_form_spanning_cactus(k, std::span<const Edge>(chosen.data(), static_cast<std::size_t>(c)))) {
        out.value = target;
        out.best_subset = s;
        return out;
      }
    }
  }
  return out;
}

struct Best {
  int value = -1;
  Vertex cut = -1;
  VertexMask part = 0;
};

// Max over x (deg >= 2 in G[X], ascending) and splits A containing the
// lowest vertex of X - x (ascending), of I(A + x) + I(B + x).
template <typename Lookup>
Best best_split(std::span<const VertexMask> adj, VertexMask subset, int bound, DpFault fault,
                Lookup&& lookup, std::uint64_t& splits) {
  Best best;
  for (VertexMask xs = subset; xs; xs &= xs - 1) {
    const int x = std::countr_zero(xs);
    if (std::popcount(adj[static_cast<std::size_t>(x)] & subset) < 2) continue;
    const VertexMask xb = bit(x);
    const VertexMask rest_all = subset & ~xb;
    const VertexMask low = rest_all & (~rest_all + 1);
    const VertexMask rest = rest_all ^ low;
    for (VertexMask s = 0;; s = (s - rest) & rest) {
      const VertexMask b = rest ^ s;
      if (b == 0) break;
      const int va = lookup(low | s | xb);
      if (va >= 0) {
        int vb = lookup(b | xb);
        if (vb < 0 && fault == DpFault::SkipBConnectivity) vb = 0;
        if (vb >= 0) {
          ++splits;
          if (va + vb > best.value) {
            best = {va + vb, x, low | s};
            if (best.value == bound) return best;
          }
        }
      }
      if (((s - rest) & rest) == 0) break;
    }
  }
  return best;
}

struct Evaluator {
  std::span<const VertexMask> adj;
  DpFault fault;

  bool shortcut_applies(VertexMask subset, int k, int edges) const {
    if (fault == DpFault::CactusShortcutByEdgeBound) return edges <= cactus_edge_bound(k);
    return mask_induces_cactus(adj, subset);
  }

  // Requires G[subset] connected and every proper connected subset final.
  template <typename Lookup>
  void evaluate(SubsetTable& table, VertexMask subset, Lookup&& lookup, DpStats& stats) const {
    ++stats.subsets_evaluated;
    const int k = std::popcount(subset);
    if (k <= kBaseCaseMaxVertices) {
      table.set_base(subset, solve_base(adj, subset).value);
      return;
    }
    const int edges = induced_edge_count(adj, subset);
    if (shortcut_applies(subset, k, edges)) {
      table.set_cactus(subset, edges);
      return;
    }
    const Best best = best_split(adj, subset, std::min(edges, cactus_edge_bound(k)), fault,
                                 std::forward<Lookup>(lookup), stats.splits_examined);
    if (best.value < 0) fail(ErrorCode::InternalError, "no admissible split for a non-cactus subset");
    table.set_split(subset, best.value, best.cut, best.part);
  }
};

void check_dp_graph(const Graph& g, int max_n) {
  if (g.n() > std::min(max_n, kDpHardMaxVertices)) {
    fail(ErrorCode::TooManyVertices,
         "n=" + std::to_string(g.n()) + " exceeds cap " + std::to_string(std::min(max_n, kDpHardMaxVertices)));
  }
}

void run_serial(const Evaluator& ev, SubsetTable& table, DpStats& stats) {
  const VertexMask full = (VertexMask{1} << table.n()) - 1;
  auto lookup = [&table](VertexMask s) { return table.value(s); };
  // Every proper subset of X is a smaller integer than X.
  for (VertexMask x = 1; x <= full; ++x) {
    if (mask_is_connected(ev.adj, x)) ev.evaluate(table, x, lookup, stats);
  }
}

std::vector<VertexMask> layer(int n, int k) {
  std::vector<VertexMask> out;
  if (k > n) return out;
  const VertexMask limit = VertexMask{1} << n;
  for (VertexMask v = (VertexMask{1} << k) - 1; v < limit;) {
    out.push_back(v);
    const VertexMask t = v | (v - 1);
    v = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
  }
  return out;
}

void run_parallel(const Evaluator& ev, SubsetTable& table, int threads, DpStats& stats) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
  auto lookup = [&table](VertexMask s) { return table.value(s); };
  for (int k = 1; k <= table.n(); ++k) {
    const auto masks = layer(table.n(), k);
    const auto count = static_cast<std::int64_t>(masks.size());
    std::uint64_t evaluated = 0;
    std::uint64_t splits = 0;
    std::exception_ptr error;
    // Entries of one layer only read strictly smaller, already final layers.
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : evaluated, splits)
    for (std::int64_t i = 0; i < count; ++i) {
      const VertexMask x = masks[static_cast<std::size_t>(i)];
      if (!mask_is_connected(ev.adj, x)) continue;
      DpStats local;
      try {
        ev.evaluate(table, x, lookup, local);
      } catch (...) {
#pragma omp critical(cactus_dp_error)
        if (!error) error = std::current_exception();
      }
      evaluated += local.subsets_evaluated;
      splits += local.splits_examined;
    }
    if (error) std::rethrow_exception(error);
    stats.subsets_evaluated += evaluated;
    stats.splits_examined += splits;
  }
}

int top_down(const Evaluator& ev, SubsetTable& table, VertexMask subset, DpStats& stats) {
  if (table.is_final(subset)) return table.value(subset);
  auto lookup = [&](VertexMask s) {
    if (table.is_final(s)) return table.value(s);
    if (!mask_is_connected(ev.adj, s)) return -1;
    return top_down(ev, table, s, stats);
  };
  ev.evaluate(table, subset, lookup, stats);
  return table.value(subset);
}

void collect(const Graph& g, const SubsetTable& table, VertexMask subset, std::vector<EdgeId>& out) {
  switch (table.kind(subset)) {
    case EntryKind::Unset:
      fail(ErrorCode::InternalError, "reconstruction reached an unset entry");
    case EntryKind::Base: {
      const auto base = base_case_I(g, subset);
      out.insert(out.end(), base.kept.begin(), base.kept.end());
      return;
    }
    case EntryKind::CactusShortcut:
      for (EdgeId e = 0; e < g.m(); ++e) {
        if ((subset & bit(g.edge(e).u)) && (subset & bit(g.edge(e).v))) out.push_back(e);
      }
      return;
    case EntryKind::Split: {
      const auto [x, a] = table.split(subset);
      const VertexMask b = subset & ~a & ~bit(x);
      collect(g, table, a | bit(x), out);
      collect(g, table, b | bit(x), out);
      return;
    }
  }
}

}  // namespace

BaseCaseResult base_case_I(const Graph& g, VertexMask subset) {
  if (!g.has_masks()) fail(ErrorCode::TooManyVertices, "bitmask subsets need n <= 64");
  subset &= g.all_vertices();
  if (subset == 0) fail(ErrorCode::EmptySubset);
  if (std::popcount(subset) > kBaseCaseMaxVertices) {
    fail(ErrorCode::SubsetTooLarge, std::to_string(std::popcount(subset)) + " vertices");
  }
  if (!mask_is_connected(g.neighbor_masks(), subset)) fail(ErrorCode::NotConnectedSubset);
  const LocalBase lb = solve_base(g.neighbor_masks(), subset);
  BaseCaseResult out;
  out.value = lb.value;
  for (std::uint32_t r = lb.best_subset; r; r &= r - 1) {
    const Edge& e = lb.host_edges[static_cast<std::size_t>(std::countr_zero(r))];
    out.kept.push_back(*g.find_edge(e.u, e.v));
  }
  std::sort(out.kept.begin(), out.kept.end());
  return out;
}

int find_cut_cactus(Vertex x, VertexMask part, VertexMask subset, const SubsetTable& table) {
  const VertexMask xb = bit(x);
  const VertexMask other = subset & ~part & ~xb;
  if (!(subset & xb) || (part & ~subset) || (part & xb) || part == 0 || other == 0) {
    fail(ErrorCode::PreconditionViolated, "split outside the recurrence domain");
  }
  if (!table.is_final(part | xb) || !table.is_final(other | xb)) {
    fail(ErrorCode::PreconditionViolated, "split part is not a finalized connected subset");
  }
  return table.value(part | xb) + table.value(other | xb);
}

int find_max_cactus(VertexMask subset, const Graph& g, SubsetTable& table, DpFault fault) {
  if (subset == 0 || (subset & ~g.all_vertices()) || !mask_is_connected(g.neighbor_masks(), subset)) {
    fail(ErrorCode::NotConnectedSubset);
  }
  DpStats stats;
  return top_down(Evaluator{g.neighbor_masks(), fault}, table, subset, stats);
}

SubsetTable build_subset_table(const Graph& g, const DpOptions& options, DpStats* stats) {
  check_dp_graph(g, options.max_n);
  if (!is_connected(g)) fail(ErrorCode::NotConnected);
  SubsetTable table(g.n());
  DpStats local;
  const Evaluator ev{g.neighbor_masks(), options.fault};
  switch (options.kernel) {
    case DpKernel::Serial: run_serial(ev, table, local); break;
    case DpKernel::Parallel: run_parallel(ev, table, options.threads, local); break;
    case DpKernel::TopDown: top_down(ev, table, g.all_vertices(), local); break;
  }
  if (stats) *stats = local;
  return table;
}

std::vector<EdgeId> reconstruct_cactus(const Graph& g, const SubsetTable& table, VertexMask subset) {
  std::vector<EdgeId> out;
  collect(g, table, subset, out);
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    fail(ErrorCode::InternalError, "reconstructed parts share an edge");
  }
  return out;
}

}  // namespace cactus
