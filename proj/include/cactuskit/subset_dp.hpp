#pragma once

#include <cstdint>
#include <vector>

#include "cactuskit/graph.hpp"

namespace cactus {

// Sets with at most this many vertices are solved by enumerating edge subsets.
inline constexpr int kBaseCaseMaxVertices = 5;
inline constexpr int kDefaultDpMaxVertices = 25;
// Table entries are addressed by a 2^n array; beyond this it cannot be allocated anyway.
inline constexpr int kDpHardMaxVertices = 30;

enum class EntryKind : std::uint8_t { Unset, Base, CactusShortcut, Split };

struct SplitWitness {
  Vertex cut = -1;
  VertexMask part = 0;  // A; the other side is X - A - {cut}
};

// I(X) for every X with G[X] connected, plus how each value was obtained.
// Entries are written once; an entry with a non-negative value is final.
class SubsetTable {
 public:
  explicit SubsetTable(int n);

  int n() const noexcept { return n_; }
  bool is_final(VertexMask x) const { return values_[static_cast<std::size_t>(x)] >= 0; }
  int value(VertexMask x) const { return values_[static_cast<std::size_t>(x)]; }
  EntryKind kind(VertexMask x) const;
  SplitWitness split(VertexMask x) const;

  void set_base(VertexMask x, int value);
  void set_cactus(VertexMask x, int value);
  void set_split(VertexMask x, int value, Vertex cut, VertexMask part);

  bool operator==(const SubsetTable&) const = default;

 private:
  static constexpr std::uint8_t kBaseTag = 0xFF;
  static constexpr std::uint8_t kCactusTag = 0xFE;

  int n_;
  std::vector<std::int8_t> values_;  // -1: unset (G[X] not connected)
  std::vector<std::uint8_t> cuts_;
  std::vector<std::uint32_t> parts_;
};

enum class DpKernel {
  Serial,    // ascending integer order over all subsets (reference)
  Parallel,  // popcount layers, each layer evaluated with OpenMP
  TopDown,   // memoized recursion from V through find_max_cactus
};

// Deliberately broken recurrences, used to show the cross-checks catch them.
enum class DpFault {
  None,
  // Reads I(B+x) without checking G[B+x] is connected (unset counts as 0).
  SkipBConnectivity,
  // Cactus shortcut tested by the edge-count bound instead of a real test.
  CactusShortcutByEdgeBound,
};

struct DpOptions {
  int max_n = kDefaultDpMaxVertices;
  DpKernel kernel = DpKernel::Serial;
  int threads = 0;  // Parallel kernel only; 0 = OpenMP default
  DpFault fault = DpFault::None;
};

struct DpStats {
  std::uint64_t subsets_evaluated = 0;
  std::uint64_t splits_examined = 0;
};

struct BaseCaseResult {
  int value = 0;
  std::vector<EdgeId> kept;  // host edge ids, ascending
};

// Exact I(X) for |X| <= 5 by enumerating the edge subsets of G[X], largest
// first. Throws SubsetTooLarge / NotConnectedSubset.
BaseCaseResult base_case_I(const Graph& g, VertexMask subset);

// J_X[x, A] = I(A + x) + I(B + x) from finalized entries. Throws
// PreconditionViolated when the split is outside the recurrence's domain.
int find_cut_cactus(Vertex x, VertexMask part, VertexMask subset, const SubsetTable& table);

// I(X), computing missing sub-entries recursively (memoized in `table`).
// Throws NotConnectedSubset.
int find_max_cactus(VertexMask subset, const Graph& g, SubsetTable& table, DpFault fault = DpFault::None);

// Fills the table for all connected subsets using the selected kernel.
SubsetTable build_subset_table(const Graph& g, const DpOptions& options, DpStats* stats = nullptr);

// Kept edges of an optimal spanning cactus of G[X]: split witnesses are
// followed down to base and shortcut leaves, whose edge sets are united.
std::vector<EdgeId> reconstruct_cactus(const Graph& g, const SubsetTable& table, VertexMask subset);

}  // namespace cactus
