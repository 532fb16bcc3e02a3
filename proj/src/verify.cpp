#include "cactuskit/verify.hpp"

#include <algorithm>
#include <functional>

#include "cactuskit/error.hpp"

namespace cactus {

bool VerifyReport::consistent() const noexcept {
  int seen = -1;
  for (const auto& run : runs) {
    if (run.status == RunStatus::Failed) return false;
    if (run.status != RunStatus::Ok) continue;
    if (seen >= 0 && run.deleted_count != seen) return false;
    seen = run.deleted_count;
  }
  return true;
}

int VerifyReport::completed() const noexcept {
  return static_cast<int>(std::count_if(runs.begin(), runs.end(),
                                        [](const AlgorithmRun& r) { return r.status == RunStatus::Ok; }));
}

VerifyReport cross_check(const Graph& g, const VerifyOptions& options) {
  if (!is_connected(g)) fail(ErrorCode::NotConnected);
  const std::pair<EdcAlgorithm, std::function<EdcResult()>> solvers[] = {
      {EdcAlgorithm::SubsetDp, [&] { return edc_subset_dp(g, options.dp); }},
      {EdcAlgorithm::TreeEnum, [&] { return edc_tree_enum(g, options.max_trees); }},
      {EdcAlgorithm::Brute, [&] { return edc_brute_force(g); }},
  };
  VerifyReport report;
  for (const auto& [algo, solve] : solvers) {
    AlgorithmRun run;
    run.algorithm = algo;
    try {
      run.deleted_count = solve().deleted_count;
      run.status = RunStatus::Ok;
    } catch (const Error& e) {
      if (e.category() == ErrorCategory::InvalidInput) throw;
      run.status = e.category() == ErrorCategory::LimitExceeded ? RunStatus::Skipped : RunStatus::Failed;
      run.detail = e.what();
    }
    report.runs.push_back(std::move(run));
  }
  return report;
}

}  // namespace cactus
