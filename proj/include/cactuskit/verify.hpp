#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cactuskit/edge_deletion.hpp"
#include "cactuskit/graph.hpp"

namespace cactus {

struct VerifyOptions {
  DpOptions dp;
  std::uint64_t max_trees = kDefaultMaxTrees;
};

enum class RunStatus { Ok, Skipped, Failed };

struct AlgorithmRun {
  EdcAlgorithm algorithm = EdcAlgorithm::SubsetDp;
  RunStatus status = RunStatus::Skipped;
  int deleted_count = -1;
  std::string detail;  // reason for Skipped / Failed
};

struct VerifyReport {
  std::vector<AlgorithmRun> runs;  // dp, enum, brute

  // No run failed and every completed run reports the same count.
  bool consistent() const noexcept;
  int completed() const noexcept;
};

// Runs every algorithm whose limits admit g. Limit errors mark a run Skipped,
// internal errors mark it Failed; invalid input propagates.
VerifyReport cross_check(const Graph& g, const VerifyOptions& options = {});

}  // namespace cactus
