#include "cactuskit/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

#include "cactuskit/error.hpp"

namespace cactus {

namespace {

EdcResult solve(const Graph& g, EdcAlgorithm algo, const BenchConfig& config) {
  switch (algo) {
    case EdcAlgorithm::SubsetDp: return edc_subset_dp(g, config.dp);
    case EdcAlgorithm::TreeEnum: return edc_tree_enum(g, config.max_trees);
    case EdcAlgorithm::Brute: return edc_brute_force(g);
  }
  fail(ErrorCode::InternalError, "unknown algorithm");
}

BenchRecord measure(const Graph& g, EdcAlgorithm algo, const BenchConfig& config) {
  using Clock = std::chrono::steady_clock;
  BenchRecord rec;
  rec.n = g.n();
  rec.m = g.m();
  rec.algorithm = algo;
  try {
    EdcResult result = solve(g, algo, config);
    std::vector<double> times;
    for (int t = 0; t < config.trials; ++t) {
      const auto start = Clock::now();
      result = solve(g, algo, config);
      times.push_back(std::chrono::duration<double, std::milli>(Clock::now() - start).count());
    }
    std::sort(times.begin(), times.end());
    const std::size_t mid = times.size() / 2;
    rec.wall_ms = times.size() % 2 == 1 ? times[mid] : (times[mid - 1] + times[mid]) / 2.0;
    rec.status = "ok";
    rec.deleted_count = result.deleted_count;
    rec.work = result.stats.work(algo);
  } catch (const Error& e) {
    if (e.category() != ErrorCategory::LimitExceeded) throw;
    rec.status = std::string(to_string(e.code()));
  }
  return rec;
}

}  // namespace

BenchOutcome run_bench(const BenchConfig& config) {
  if (config.n_lo < 1 || config.n_lo > config.n_hi) fail(ErrorCode::InfeasibleParams, "empty n range");
  if (config.trials < 1) fail(ErrorCode::InfeasibleParams, "trials must be >= 1");
  if (config.instances_per_n < 1) fail(ErrorCode::InfeasibleParams, "instances per n must be >= 1");
  BenchOutcome out;
  for (int n = config.n_lo; n <= config.n_hi; ++n) {
    for (int i = 0; i < config.instances_per_n; ++i) {
      const std::uint64_t seed = config.seed * 1'000'003ULL + static_cast<std::uint64_t>(n) * 1'009ULL + static_cast<std::uint64_t>(i);
      const int extra = config.kind == GenKind::Complete ? 0 : (config.extra < 0 ? n : config.extra);
      const Graph g = gen_instance(config.kind, n, extra, seed);
      const std::string id = std::string(to_string(config.kind)) + "-n" + std::to_string(n) + "-s" + std::to_string(seed);
      int seen = -1;
      bool disagree = false;
      for (EdcAlgorithm algo : config.algorithms) {
        BenchRecord rec = measure(g, algo, config);
        rec.instance_id = id;
        if (rec.status == "ok") {
          if (seen >= 0 && seen != rec.deleted_count) disagree = true;
          seen = rec.deleted_count;
        }
        out.records.push_back(std::move(rec));
      }
      if (disagree) out.disagreements.push_back(id);
    }
  }
  return out;
}

std::string bench_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << "instance_id,n,m,algorithm,status,deleted_count,wall_ms,work\n";
  for (const auto& r : records) {
    out << r.instance_id << ',' << r.n << ',' << r.m << ',' << to_string(r.algorithm) << ',' << r.status << ',';
    if (r.status == "ok") {
      char ms[32];
      std::snprintf(ms, sizeof ms, "%.3f", r.wall_ms);
      out << r.deleted_count << ',' << ms << ',' << r.work;
    } else {
      out << ",,";
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace cactus
