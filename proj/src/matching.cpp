#include "cactuskit/matching.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "cactuskit/error.hpp"

namespace cactus {

void MatchingInstance::validate() const {
  std::set<std::pair<int, int>> seen;
  for (const auto& e : edges) {
    if (e.a < 0 || e.b < 0 || e.a >= node_count || e.b >= node_count) {
      fail(ErrorCode::PreconditionViolated, "matching edge node out of range");
    }
    if (e.a == e.b) fail(ErrorCode::PreconditionViolated, "matching instance has a loop");
    if (!seen.emplace(std::min(e.a, e.b), std::max(e.a, e.b)).second) {
      fail(ErrorCode::PreconditionViolated, "matching instance has a duplicate edge");
    }
  }
}

namespace {

// Edmonds' algorithm with blossom bases (Gabow-style array formulation).
class Blossom {
 public:
  explicit Blossom(const MatchingInstance& inst, int removed = -1)
      : n_(inst.node_count), adj_(static_cast<std::size_t>(n_)), mate_(static_cast<std::size_t>(n_), -1) {
    for (const auto& e : inst.edges) {
      if (e.a == removed || e.b == removed) continue;
      adj_[static_cast<std::size_t>(e.a)].push_back(e.b);
      adj_[static_cast<std::size_t>(e.b)].push_back(e.a);
    }
    for (auto& row : adj_) std::sort(row.begin(), row.end());
  }

  void solve() {
    for (int v = 0; v < n_; ++v) {
      if (mate_[at(v)] != -1 || adj_[at(v)].empty()) continue;
      const int end = search({v});
      if (end != -1) augment(end);
    }
  }

  // After solve(): nodes reachable by an even alternating path from some
  // exposed node, i.e. nodes that some maximum matching leaves exposed.
  std::vector<bool> even_reachable() {
    std::vector<int> roots;
    for (int v = 0; v < n_; ++v) {
      if (mate_[at(v)] == -1) roots.push_back(v);
    }
    if (search(roots) != -1) fail(ErrorCode::InternalError, "matching was not maximum");
    return even_;
  }

  const std::vector<int>& mate() const noexcept { return mate_; }

 private:
  static std::size_t at(int v) { return static_cast<std::size_t>(v); }

  int lca(int a, int b) {
    std::vector<bool> seen(at(n_), false);
    while (true) {
      a = base_[at(a)];
      seen[at(a)] = true;
      if (mate_[at(a)] == -1) break;
      a = parent_[at(mate_[at(a)])];
    }
    while (true) {
      b = base_[at(b)];
      if (seen[at(b)]) return b;
      if (mate_[at(b)] == -1) return -1;  // different trees
      b = parent_[at(mate_[at(b)])];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[at(v)] != b) {
      in_blossom_[at(base_[at(v)])] = true;
      in_blossom_[at(base_[at(mate_[at(v)])])] = true;
      parent_[at(v)] = child;
      child = mate_[at(v)];
      v = parent_[at(mate_[at(v)])];
    }
  }

  bool is_even(int v) const {
    return mate_[at(v)] == -1 ? even_[at(v)] : parent_[at(mate_[at(v)])] != -1;
  }

  // Alternating BFS forest from `roots`. Returns an exposed endpoint of an
  // augmenting path (parent_ links lead back to a root), or -1.
  int search(const std::vector<int>& roots) {
    even_.assign(at(n_), false);
    parent_.assign(at(n_), -1);
    base_.resize(at(n_));
    std::iota(base_.begin(), base_.end(), 0);
    std::vector<int> queue;
    for (int r : roots) {
      even_[at(r)] = true;
      queue.push_back(r);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      for (int to : adj_[at(v)]) {
        if (base_[at(v)] == base_[at(to)] || mate_[at(v)] == to) continue;
        if (is_even(to)) {
          const int cur = lca(v, to);
          if (cur == -1) return -1;  // two trees touch: only possible for a non-maximum matching
          in_blossom_.assign(at(n_), false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (!in_blossom_[at(base_[at(i)])]) continue;
            base_[at(i)] = cur;
            if (!even_[at(i)]) {
              even_[at(i)] = true;
              queue.push_back(i);
            }
          }
        } else if (parent_[at(to)] == -1) {
          parent_[at(to)] = v;
          if (mate_[at(to)] == -1) return to;
          even_[at(mate_[at(to)])] = true;
          queue.push_back(mate_[at(to)]);
        }
      }
    }
    return -1;
  }

  void augment(int v) {
    while (v != -1) {
      const int pv = parent_[at(v)];
      const int next = mate_[at(pv)];
      mate_[at(v)] = pv;
      mate_[at(pv)] = v;
      v = next;
    }
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> mate_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<bool> even_;
  std::vector<bool> in_blossom_;
};

Matching collect(const MatchingInstance& inst, const std::vector<int>& mate) {
  Matching m;
  for (int i = 0; i < static_cast<int>(inst.edges.size()); ++i) {
    const auto& e = inst.edges[static_cast<std::size_t>(i)];
    if (mate[static_cast<std::size_t>(e.a)] == e.b) m.edge_ids.push_back(i);
  }
#ifndef NDEBUG
  std::vector<bool> used(static_cast<std::size_t>(inst.node_count), false);
  for (int i : m.edge_ids) {
    for (int v : {inst.edges[static_cast<std::size_t>(i)].a, inst.edges[static_cast<std::size_t>(i)].b}) {
      if (used[static_cast<std::size_t>(v)]) fail(ErrorCode::InternalError, "matching edges share a node");
      used[static_cast<std::size_t>(v)] = true;
    }
  }
#endif
  return m;
}

int brute_rec(const MatchingInstance& inst, std::size_t i, std::vector<char>& used) {
  if (i == inst.edges.size()) return 0;
  int best = brute_rec(inst, i + 1, used);
  const auto& e = inst.edges[i];
  auto& ua = used[static_cast<std::size_t>(e.a)];
  auto& ub = used[static_cast<std::size_t>(e.b)];
  if (!ua && !ub) {
    ua = ub = 1;
    best = std::max(best, 1 + brute_rec(inst, i + 1, used));
    ua = ub = 0;
  }
  return best;
}

}  // namespace

Matching max_matching(const MatchingInstance& inst) {
  inst.validate();
  Blossom b(inst);
  b.solve();
  return collect(inst, b.mate());
}

Matching max_matching_avoiding(const MatchingInstance& inst, int exposed_node) {
  inst.validate();
  Blossom b(inst, exposed_node);
  b.solve();
  return collect(inst, b.mate());
}

std::vector<bool> always_matched_nodes(const MatchingInstance& inst) {
  inst.validate();
  Blossom b(inst);
  b.solve();
  auto even = b.even_reachable();
  even.flip();
  return even;
}

int brute_matching(const MatchingInstance& inst) {
  if (inst.edges.size() > 20) {
    fail(ErrorCode::TooLargeForOracle, std::to_string(inst.edges.size()) + " edges (cap 20)");
  }
  std::vector<char> used(static_cast<std::size_t>(inst.node_count), 0);
  return brute_rec(inst, 0, used);
}

}  // namespace cactus
