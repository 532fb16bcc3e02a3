#include "cactuskit/tree_to_cactus.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

#include "cactuskit/blocks.hpp"
#include "cactuskit/error.hpp"
#include "cactuskit/matching.hpp"

namespace cactus {

bool ConflictGraph::adjacent(int i, int j) const {
  const auto& row = adjacency.at(static_cast<std::size_t>(i));
  return std::binary_search(row.begin(), row.end(), j);
}

std::vector<TreePath> nontree_paths(const SpanningTree& t) {
  std::vector<TreePath> paths;
  for (EdgeId e : t.non_tree_edge_ids()) {
    const auto& [u, v] = t.host().edge(e);
    TreePath p = tree_path(t, u, v);
    p.nontree_edge = e;
    paths.push_back(std::move(p));
  }
  return paths;
}

ConflictBuild build_conflict_graph(const Graph& g, const SpanningTree& t) {
  if (&t.host() != &g && t.host().edges() != g.edges()) fail(ErrorCode::InvalidTree);
  ConflictBuild out;
  out.paths = nontree_paths(t);
  const auto k = out.paths.size();
  out.conflicts.adjacency.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    out.conflicts.nontree_edge_ids.push_back(out.paths[i].nontree_edge);
    for (std::size_t j = i + 1; j < k; ++j) {
      if (paths_share_edge(out.paths[i], out.paths[j])) {
        out.conflicts.adjacency[i].push_back(static_cast<int>(j));
        out.conflicts.adjacency[j].push_back(static_cast<int>(i));
      }
    }
  }
  for (auto& row : out.conflicts.adjacency) std::sort(row.begin(), row.end());
  return out;
}

namespace {

// A path seen from its LCA: the one or two down-edges it uses there (named
// by their child vertex), and the (vertex, child) pairs where it passes
// straight through a lower vertex.
struct PathShape {
  Vertex lca;
  Vertex down_a;  // -1 when the endpoint is the LCA itself
  Vertex down_b;
  std::vector<std::pair<Vertex, Vertex>> pass_through;
};

PathShape shape_of(const TreePath& p) {
  PathShape s{p.lca, -1, -1, {}};
  const auto& vs = p.vertices;
  const auto lca_pos = static_cast<std::size_t>(std::find(vs.begin(), vs.end(), p.lca) - vs.begin());
  if (lca_pos > 0) s.down_a = vs[lca_pos - 1];
  if (lca_pos + 1 < vs.size()) s.down_b = vs[lca_pos + 1];
  for (std::size_t i = 1; i < lca_pos; ++i) s.pass_through.emplace_back(vs[i], vs[i - 1]);
  for (std::size_t i = lca_pos + 1; i + 1 < vs.size(); ++i) s.pass_through.emplace_back(vs[i], vs[i + 1]);
  return s;
}

struct LocalInstance {
  MatchingInstance inst;
  std::map<Vertex, int> node_of_child;
  int max_size = 0;
};

}  // namespace

std::vector<int> max_disjoint_paths(const SpanningTree& t, const std::vector<TreePath>& paths) {
  const auto n = static_cast<std::size_t>(t.n());
  std::vector<PathShape> shapes;
  shapes.reserve(paths.size());
  std::vector<std::vector<int>> by_lca(n);
  for (std::size_t i = 0; i < paths.size(); ++i) {
    shapes.push_back(shape_of(paths[i]));
    by_lca[static_cast<std::size_t>(shapes.back().lca)].push_back(static_cast<int>(i));
  }

  // exposable[c]: some maximum matching at parent(c) leaves edge (parent(c), c) free.
  std::vector<char> exposable(n, 1);
  std::vector<LocalInstance> local(n);

  const auto& order = t.bfs_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    auto& li = local[static_cast<std::size_t>(v)];
    std::map<std::pair<int, int>, bool> seen_pairs;
    for (int idx : by_lca[static_cast<std::size_t>(v)]) {
      const auto& s = shapes[static_cast<std::size_t>(idx)];
      const bool alive = std::all_of(s.pass_through.begin(), s.pass_through.end(), [&](const auto& wc) {
        return exposable[static_cast<std::size_t>(wc.second)] != 0;
      });
      if (!alive) continue;
      auto node = [&](Vertex child) {
        if (child < 0) return li.inst.node_count++;  // private degree-1 node
        auto [pos, fresh] = li.node_of_child.try_emplace(child, li.inst.node_count);
        if (fresh) ++li.inst.node_count;
        return pos->second;
      };
      int a = node(s.down_a);
      int b = node(s.down_b);
      if (a > b) std::swap(a, b);
      // Parallel paths are interchangeable at v; keep the lowest index.
      if (s.down_a >= 0 && s.down_b >= 0 && !seen_pairs.emplace(std::pair{a, b}, true).second) continue;
      li.inst.edges.push_back({a, b, idx});
    }
    if (li.inst.edges.empty()) continue;
    li.max_size = max_matching(li.inst).size();
    const auto pinned = always_matched_nodes(li.inst);
    for (const auto& [child, node] : li.node_of_child) {
      exposable[static_cast<std::size_t>(child)] = pinned[static_cast<std::size_t>(node)] ? 0 : 1;
    }
  }

  std::vector<Vertex> must_expose(n, -1);
  std::vector<int> selected;
  for (Vertex v : order) {
    const auto& li = local[static_cast<std::size_t>(v)];
    if (li.inst.edges.empty()) continue;
    const Vertex child = must_expose[static_cast<std::size_t>(v)];
    const auto found = child >= 0 ? li.node_of_child.find(child) : li.node_of_child.end();
    const Matching m = found != li.node_of_child.end() ? max_matching_avoiding(li.inst, found->second)
                                                       : max_matching(li.inst);
    if (m.size() != li.max_size) {
      fail(ErrorCode::InternalError, "routed down-edge at vertex " + std::to_string(v) + " was not exposable");
    }
    for (int e : m.edge_ids) {
      const int idx = static_cast<int>(li.inst.edges[static_cast<std::size_t>(e)].tag);
      selected.push_back(idx);
      for (const auto& [w, c] : shapes[static_cast<std::size_t>(idx)].pass_through) {
        auto& slot = must_expose[static_cast<std::size_t>(w)];
        if (slot != -1) fail(ErrorCode::InternalError, "two routed paths share an up-edge");
        slot = c;
      }
    }
  }
  std::sort(selected.begin(), selected.end());
  return selected;
}

namespace {

bool tree_plus_is_cactus(const Graph& g, const SpanningTree& t, const std::vector<EdgeId>& extra) {
  std::vector<EdgeId> keep = t.tree_edge_ids();
  keep.insert(keep.end(), extra.begin(), extra.end());
  return is_cactus(edge_subgraph(g, keep)).cactus;
}

void check_inputs(const Graph& g, const SpanningTree& t) {
  if (!is_connected(g)) fail(ErrorCode::NotConnected);
  if (&t.host() != &g && (t.host().n() != g.n() || t.host().edges() != g.edges())) {
    fail(ErrorCode::InvalidTree, "tree belongs to a different graph");
  }
}

}  // namespace

StcResult spanning_tree_to_cactus(const Graph& g, const SpanningTree& t) {
  check_inputs(g, t);
  const auto paths = nontree_paths(t);
  StcResult r;
  for (int idx : max_disjoint_paths(t, paths)) {
    r.added_edge_ids.push_back(paths[static_cast<std::size_t>(idx)].nontree_edge);
  }
  std::sort(r.added_edge_ids.begin(), r.added_edge_ids.end());
  r.added_count = static_cast<int>(r.added_edge_ids.size());
  r.cactus_edge_count = g.n() - 1 + r.added_count;
  if (!tree_plus_is_cactus(g, t, r.added_edge_ids)) {
    fail(ErrorCode::InternalError, "tree-to-cactus witness is not a cactus");
  }
  return r;
}

int stc_brute_force(const Graph& g, const SpanningTree& t) {
  check_inputs(g, t);
  const auto extra = t.non_tree_edge_ids();
  if (extra.size() > 20) {
    fail(ErrorCode::TooLargeForOracle, std::to_string(extra.size()) + " non-tree edges (cap 20)");
  }
  int best = 0;
  const std::uint32_t subsets = std::uint32_t{1} << extra.size();
  for (std::uint32_t s = 1; s < subsets; ++s) {
    if (std::popcount(s) <= best) continue;
    std::vector<EdgeId> chosen;
    for (std::size_t i = 0; i < extra.size(); ++i) {
      if (s >> i & 1U) chosen.push_back(extra[i]);
    }
    if (tree_plus_is_cactus(g, t, chosen)) best = std::popcount(s);
  }
  return best;
}

}  // namespace cactus
