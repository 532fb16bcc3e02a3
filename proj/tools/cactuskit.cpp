// Command-line front end. Exit codes: 0 ok, 1 invalid input, 2 limit
// exceeded, 3 internal error or failed cross-check.
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cactuskit/bench.hpp"
#include "cactuskit/blocks.hpp"
#include "cactuskit/edge_deletion.hpp"
#include "cactuskit/error.hpp"
#include "cactuskit/generators.hpp"
#include "cactuskit/io.hpp"
#include "cactuskit/minimality.hpp"
#include "cactuskit/tree_to_cactus.hpp"
#include "cactuskit/verify.hpp"

#ifndef CACTUSKIT_DEFAULT_FAULT
#define CACTUSKIT_DEFAULT_FAULT None
#endif

namespace {

using namespace cactus;

constexpr DpFault kBuildFault = DpFault::CACTUSKIT_DEFAULT_FAULT;

std::string join(const std::vector<EdgeId>& ids) {
  std::ostringstream out;
  for (std::size_t i = 0; i < ids.size(); ++i) out << (i ? " " : "") << ids[i];
  return out.str();
}

std::string_view kind_name(BlockKind k) {
  switch (k) {
    case BlockKind::BridgeEdge: return "bridge";
    case BlockKind::SimpleCycle: return "cycle";
    case BlockKind::Other: return "other";
  }
  return "?";
}

std::string_view status_name(RunStatus s) {
  switch (s) {
    case RunStatus::Ok: return "ok";
    case RunStatus::Skipped: return "skipped";
    case RunStatus::Failed: return "FAILED";
  }
  return "?";
}

Graph load_graph(const std::string& path) { return parse_graph_file(read_text_file(path)); }

DpKernel parse_kernel(const std::string& name) {
  if (name == "serial") return DpKernel::Serial;
  if (name == "parallel") return DpKernel::Parallel;
  if (name == "topdown") return DpKernel::TopDown;
  fail(ErrorCode::SyntaxError, "unknown kernel '" + name + "'");
}

EdcAlgorithm parse_algo(const std::string& name) {
  if (name == "dp") return EdcAlgorithm::SubsetDp;
  if (name == "enum") return EdcAlgorithm::TreeEnum;
  if (name == "brute") return EdcAlgorithm::Brute;
  fail(ErrorCode::SyntaxError, "unknown algorithm '" + name + "'");
}

struct Args {
  std::string graph;
  std::string tree;
  std::string algo = "dp";
  std::string kernel = "serial";
  std::string kind = "random";
  std::string out;
  std::string csv;
  std::string n_range = "6:14";
  std::string algos = "dp,enum";
  bool emit = false;
  int max_n = kDefaultDpMaxVertices;
  std::uint64_t max_trees = kDefaultMaxTrees;
  int threads = 0;
  int n = 0;
  int extra = -1;
  int trials = 5;
  int per_n = 1;
  std::uint64_t seed = 1;
};

DpOptions dp_options(const Args& a) {
  DpOptions o;
  o.max_n = a.max_n;
  o.kernel = parse_kernel(a.kernel);
  o.threads = a.threads;
  o.fault = kBuildFault;
  return o;
}

int cmd_recognize(const Args& a) {
  const Graph g = load_graph(a.graph);
  const auto verdict = is_cactus(g);
  std::cout << "cactus " << (verdict.cactus ? "yes" : "no") << '\n';
  for (const auto& b : verdict.witness.blocks) std::cout << "block " << kind_name(b.kind) << ' ' << join(b.edges) << '\n';
  std::cout << "cut-vertices " << join(verdict.witness.cut_vertices) << '\n';
  return 0;
}

int cmd_stc(const Args& a) {
  const Graph g = load_graph(a.graph);
  const SpanningTree t = parse_tree_file(read_text_file(a.tree), g);
  const StcResult r = spanning_tree_to_cactus(g, t);
  std::cout << "added " << r.added_count << '\n';
  std::cout << "deleted " << (g.m() - (g.n() - 1) - r.added_count) << '\n';
  if (a.emit) {
    std::vector<EdgeId> keep = t.tree_edge_ids();
    keep.insert(keep.end(), r.added_edge_ids.begin(), r.added_edge_ids.end());
    std::sort(keep.begin(), keep.end());
    std::cout << "keep " << join(keep) << '\n';
  }
  return 0;
}

int cmd_edc(const Args& a) {
  const Graph g = load_graph(a.graph);
  EdcResult r;
  switch (parse_algo(a.algo)) {
    case EdcAlgorithm::SubsetDp: r = edc_subset_dp(g, dp_options(a)); break;
    case EdcAlgorithm::TreeEnum: r = edc_tree_enum(g, a.max_trees); break;
    case EdcAlgorithm::Brute: r = edc_brute_force(g); break;
  }
  std::cout << "deleted " << r.deleted_count << '\n';
  if (a.emit) std::cout << "keep " << join(r.kept_edge_ids) << '\n';
  return 0;
}

int cmd_verify(const Args& a) {
  const Graph g = load_graph(a.graph);
  VerifyOptions opts;
  opts.dp = dp_options(a);
  opts.max_trees = a.max_trees;
  const VerifyReport report = cross_check(g, opts);
  for (const auto& run : report.runs) {
    std::cout << to_string(run.algorithm) << ' ' << status_name(run.status);
    if (run.status == RunStatus::Ok) std::cout << ' ' << run.deleted_count;
    if (!run.detail.empty()) std::cout << " (" << run.detail << ')';
    std::cout << '\n';
  }
  if (!report.consistent()) {
    std::cout << "DISAGREE\n";
    return 3;
  }
  if (report.completed() == 0) {
    std::cout << "no algorithm within limits\n";
    return 2;
  }
  std::cout << "agree\n";
  return 0;
}

int cmd_gen(const Args& a) {
  const auto kind = parse_gen_kind(a.kind);
  if (!kind) fail(ErrorCode::InfeasibleParams, "unknown kind '" + a.kind + "'");
  const Graph g = gen_instance(*kind, a.n, a.extra < 0 ? 0 : a.extra, a.seed);
  const std::string text = write_graph_file(g);
  if (a.out == "-") {
    std::cout << text;
  } else {
    write_text_file_atomic(a.out, text);
  }
  return 0;
}

int cmd_bench(const Args& a) {
  BenchConfig c;
  const auto kind = parse_gen_kind(a.kind);
  if (!kind) fail(ErrorCode::InfeasibleParams, "unknown kind '" + a.kind + "'");
  c.kind = *kind;
  const auto colon = a.n_range.find(':');
  try {
    c.n_lo = std::stoi(a.n_range.substr(0, colon));
    c.n_hi = colon == std::string::npos ? c.n_lo : std::stoi(a.n_range.substr(colon + 1));
  } catch (const std::exception&) {
    fail(ErrorCode::SyntaxError, "bad --n-range '" + a.n_range + "'");
  }
  c.trials = a.trials;
  c.algorithms.clear();
  std::stringstream list(a.algos);
  for (std::string name; std::getline(list, name, ',');) c.algorithms.push_back(parse_algo(name));
  c.extra = a.extra;
  c.instances_per_n = a.per_n;
  c.seed = a.seed;
  c.dp = dp_options(a);
  c.max_trees = a.max_trees;
  const BenchOutcome out = run_bench(c);
  const std::string csv = bench_csv(out.records);
  if (a.csv.empty() || a.csv == "-") {
    std::cout << csv;
  } else {
    write_text_file_atomic(a.csv, csv);
  }
  for (const auto& id : out.disagreements) std::cerr << "disagreement on " << id << '\n';
  return out.disagreements.empty() ? 0 : 3;
}

int cmd_check_minimal(const Args& a) {
  const Graph g = load_graph(a.graph);
  const MinimalityReport r = check_minimal(g);
  std::cout << "noncactus " << (r.is_noncactus ? "yes" : "no") << '\n';
  std::cout << "edge-minimal " << (r.is_edge_minimal ? (*r.is_edge_minimal ? "yes" : "no") : "n/a") << '\n';
  if (r.violating_edge) std::cout << "violating-edge " << *r.violating_edge << '\n';
  for (const auto& p : r.pair_cycle_table) {
    std::cout << "pair " << p.first << ' ' << p.second << ' ' << (p.on_common_cycle ? "yes" : "no");
    if (p.on_common_cycle) std::cout << " cycle " << join(p.witness_cycle);
    std::cout << '\n';
  }
  if (!r.pair_property_holds()) {
    std::cout << "pair property VIOLATED\n";
    return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact spanning cactus solvers"};
  app.require_subcommand(1);
  Args a;

  auto* rec = app.add_subcommand("recognize", "Cactus test with block decomposition");
  rec->add_option("-g,--graph", a.graph, "graph file")->required();

  auto* stc = app.add_subcommand("stc", "Maximum non-tree edges addable to a spanning tree");
  stc->add_option("-g,--graph", a.graph)->required();
  stc->add_option("-t,--tree", a.tree)->required();
  stc->add_flag("--emit-edges", a.emit);

  auto* edc = app.add_subcommand("edc", "Minimum edge deletion to a spanning cactus");
  edc->add_option("-g,--graph", a.graph)->required();
  edc->add_option("--algo", a.algo)->check(CLI::IsMember({"dp", "enum", "brute"}));
  edc->add_flag("--emit-edges", a.emit);

  auto* ver = app.add_subcommand("verify", "Run every applicable algorithm and compare");
  ver->add_option("-g,--graph", a.graph)->required();

  for (auto* sub : {edc, ver}) {
    sub->add_option("--max-n", a.max_n, "dp vertex limit");
    sub->add_option("--max-trees", a.max_trees, "enum spanning tree limit");
    sub->add_option("--kernel", a.kernel, "dp kernel")->check(CLI::IsMember({"serial", "parallel", "topdown"}));
    sub->add_option("--threads", a.threads, "OpenMP threads for the parallel kernel");
  }

  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("--kind", a.kind)->check(CLI::IsMember({"random", "cactus-plus", "complete", "cycle-chord"}));
  gen->add_option("-n", a.n)->required();
  gen->add_option("--extra", a.extra);
  gen->add_option("--seed", a.seed)->required();
  gen->add_option("-o,--out", a.out, "output file, - for stdout")->required();

  auto* bench = app.add_subcommand("bench", "Time solvers over generated instances, CSV out");
  bench->add_option("--kind", a.kind)->check(CLI::IsMember({"random", "cactus-plus", "complete", "cycle-chord"}));
  bench->add_option("--n-range", a.n_range, "lo:hi");
  bench->add_option("--trials", a.trials);
  bench->add_option("--algos", a.algos, "comma separated: dp,enum,brute");
  bench->add_option("--csv", a.csv);
  bench->add_option("--extra", a.extra, "extra edges, default n");
  bench->add_option("--per-n", a.per_n, "instances per size");
  bench->add_option("--seed", a.seed);
  bench->add_option("--max-n", a.max_n);
  bench->add_option("--max-trees", a.max_trees);
  bench->add_option("--kernel", a.kernel)->check(CLI::IsMember({"serial", "parallel", "topdown"}));
  bench->add_option("--threads", a.threads);

  auto* chk = app.add_subcommand("check-minimal", "Edge-minimality and common-cycle table");
  chk->add_option("-g,--graph", a.graph)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*rec) return cmd_recognize(a);
    if (*stc) return cmd_stc(a);
    if (*edc) return cmd_edc(a);
    if (*ver) return cmd_verify(a);
    if (*gen) return cmd_gen(a);
    if (*bench) return cmd_bench(a);
    if (*chk) return cmd_check_minimal(a);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_of(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
  return 1;
}
