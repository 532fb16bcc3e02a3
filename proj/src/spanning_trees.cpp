#include "cactuskit/spanning_trees.hpp"

#include <numeric>
#include <string>
#include <vector>

namespace cactus {

BigInt count_spanning_trees(const Graph& g) {
  if (!is_connected(g)) fail(ErrorCode::NotConnected);
  const int n = g.n();
  if (n == 1) return 1;
  const auto k = static_cast<std::size_t>(n - 1);
  // Laplacian with row/column 0 removed.
  std::vector<std::vector<BigInt>> a(k, std::vector<BigInt>(k, 0));
  for (const auto& [u, v] : g.edges()) {
    for (const auto& [x, y] : {std::pair{u, v}, std::pair{v, u}}) {
      if (x == 0) continue;
      const auto i = static_cast<std::size_t>(x - 1);
      a[i][i] += 1;
      if (y != 0) a[i][static_cast<std::size_t>(y - 1)] -= 1;
    }
  }
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t p = 0; p < k; ++p) {
    if (a[p][p] == 0) {
      std::size_t r = p + 1;
      while (r < k && a[r][p] == 0) ++r;
      if (r == k) return 0;
      std::swap(a[p], a[r]);
      sign = -sign;
    }
    for (std::size_t i = p + 1; i < k; ++i) {
      for (std::size_t j = p + 1; j < k; ++j) {
        a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) / prev;
      }
      a[i][p] = 0;
    }
    prev = a[p][p];
  }
  BigInt det = a[k - 1][k - 1] * sign;
  BigInt cayley = 1;
  for (int i = 0; i < n - 2; ++i) cayley *= n;
  if (det < 1 || det > cayley) {
    fail(ErrorCode::InternalError, "spanning tree count outside [1, n^(n-2)]");
  }
  return det;
}

namespace {

class RollbackDsu {
 public:
  explicit RollbackDsu(int n) : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int v) const {
    while (parent_[static_cast<std::size_t>(v)] != v) v = parent_[static_cast<std::size_t>(v)];
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)]) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
    history_.push_back(b);
    return true;
  }
  void rollback() {
    const int b = history_.back();
    history_.pop_back();
    const int a = parent_[static_cast<std::size_t>(b)];
    size_[static_cast<std::size_t>(a)] -= size_[static_cast<std::size_t>(b)];
    parent_[static_cast<std::size_t>(b)] = b;
  }
  int components_after(const Graph& g, int first_edge) const {
    RollbackDsu copy = *this;
    int comps = 0;
    for (std::size_t v = 0; v < parent_.size(); ++v) comps += parent_[v] == static_cast<int>(v);
    for (EdgeId e = first_edge; e < g.m(); ++e) comps -= copy.unite(g.edge(e).u, g.edge(e).v);
    return comps;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> history_;
};

struct Enumerator {
  const Graph& g;
  const TreeVisitor& visit;
  std::uint64_t limit;
  TreeEnumStats stats;
  RollbackDsu dsu;
  std::vector<EdgeId> chosen;

  void emit() {
    if (stats.trees_visited == limit) {
      throw LimitExceededError("more than " + std::to_string(limit) + " spanning trees", stats);
    }
    ++stats.trees_visited;
    visit(make_spanning_tree(g, chosen));
  }

  // Invariant: chosen + edges[i..] connects every vertex.
  void run(EdgeId i) {
    if (static_cast<int>(chosen.size()) == g.n() - 1) {
      emit();
      return;
    }
    const auto [u, v] = g.edge(i);
    if (dsu.unite(u, v)) {
      chosen.push_back(i);
      run(i + 1);
      chosen.pop_back();
      dsu.rollback();
    }
    if (dsu.components_after(g, i + 1) == 1) run(i + 1);
  }
};

}  // namespace

TreeEnumStats enumerate_spanning_trees(const Graph& g, const TreeVisitor& visit, std::uint64_t limit) {
  if (limit < 1) fail(ErrorCode::PreconditionViolated, "limit must be >= 1");
  Enumerator en{g, visit, limit, {}, RollbackDsu(g.n()), {}};
  en.stats.spanning_tree_count = count_spanning_trees(g);
  en.run(0);
  return en.stats;
}

}  // namespace cactus
