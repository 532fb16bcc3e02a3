#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cactuskit/edge_deletion.hpp"
#include "cactuskit/generators.hpp"

namespace cactus {

struct BenchConfig {
  GenKind kind = GenKind::Random;
  int n_lo = 6;
  int n_hi = 14;
  int trials = 5;
  std::vector<EdcAlgorithm> algorithms{EdcAlgorithm::SubsetDp, EdcAlgorithm::TreeEnum};
  int extra = -1;  // extra edges per instance; -1 means n
  int instances_per_n = 1;
  std::uint64_t seed = 1;
  DpOptions dp;
  std::uint64_t max_trees = kDefaultMaxTrees;
};

struct BenchRecord {
  std::string instance_id;
  int n = 0;
  int m = 0;
  EdcAlgorithm algorithm = EdcAlgorithm::SubsetDp;
  std::string status;  // "ok" or the limit error code
  int deleted_count = -1;
  double wall_ms = 0.0;  // median over trials, warmup excluded
  std::uint64_t work = 0;
};

struct BenchOutcome {
  std::vector<BenchRecord> records;
  std::vector<std::string> disagreements;  // instance ids
};

// Throws InfeasibleParams for an empty range or trials < 1.
BenchOutcome run_bench(const BenchConfig& config);

// Header plus one row per record:
// instance_id,n,m,algorithm,status,deleted_count,wall_ms,work
std::string bench_csv(const std::vector<BenchRecord>& records);

}  // namespace cactus
