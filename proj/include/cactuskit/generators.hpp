#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

#include "cactuskit/graph.hpp"

namespace cactus {

enum class GenKind { Random, CactusPlus, Complete, CycleChord };

std::optional<GenKind> parse_gen_kind(std::string_view name);
std::string_view to_string(GenKind kind) noexcept;

// Seeded source with a portable bounded draw (no std distributions, whose
// output differs between standard libraries).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 engine_;
};

// Connected simple graph, deterministic for a fixed seed:
//   random       uniform labelled tree (Pruefer decoding) + `extra` non-tree edges
//   cactus-plus  cactus grown by attaching bridges or cycles of length 3..6
//                at uniformly chosen vertices, then `extra` noise edges
//   complete     K_n (extra must be 0)
//   cycle-chord  C_n plus the chord (n/2 - 1, n - 1), n >= 4, then `extra` noise edges
// Throws InfeasibleParams.
Graph gen_instance(GenKind kind, int n, int extra_edges, std::uint64_t seed);

// Pruefer sequence (values in 0..n-1, length n-2) to tree edges.
std::vector<Edge> decode_pruefer(int n, const std::vector<int>& sequence);

// Edge-minimal non-cactus graph with at most n vertices: a random non-cactus
// is thinned by deleting edges (keeping it connected and non-cactus) until
// stuck, then its unique non-cactus block is returned. n >= 4.
Graph gen_minimal_noncactus(int n, std::uint64_t seed);

}  // namespace cactus
