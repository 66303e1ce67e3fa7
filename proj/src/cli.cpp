#include "rtspan/cli.hpp"

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rtspan/cover_basic.hpp"
#include "rtspan/cover_strong.hpp"
#include "rtspan/errors.hpp"
#include "rtspan/generators.hpp"
#include "rtspan/graph_io.hpp"
#include "rtspan/run_stats.hpp"
#include "rtspan/verifier.hpp"

namespace rtspan {

namespace {

struct GenArgs {
  std::string model;
  std::size_t n = 0;
  double p = 0.15;
  double wmin = 1.0;
  double wmax = 1.0;
  std::uint64_t seed = 0;
  std::string output;
};

struct BuildArgs {
  std::string input;
  int k = 2;
  std::string algo = "strong";
  std::string output;
  std::string stats;
  bool no_delete_long = false;
  unsigned threads = 1;
  bool rescale = false;
};

struct VerifyArgs {
  std::string graph;
  std::string spanner;
  int k = 2;
  std::string stats;
  unsigned threads = 1;
  bool rescale = false;
};

struct StatsArgs {
  std::string graph;
  bool rescale = false;
};

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

int run_gen(const GenArgs& a, std::ostream& out) {
  const Graph g = generate(parse_model(a.model), {a.n, a.p, a.wmin, a.wmax}, a.seed);
  std::ostringstream text;
  write_graph(text, g);
  write_file_atomic(a.output, text.str());
  out << "generated " << a.model << " n=" << g.vertex_count() << " m=" << g.edge_count() << " -> "
      << a.output << "\n";
  return kExitOk;
}

int run_build(const BuildArgs& a, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const EdgeList list = read_edge_list_file(a.input);
  const Graph g = to_graph(list, {a.rescale});

  SpannerOptions options;
  options.threads = a.threads;
  options.delete_long_edges = !a.no_delete_long;
  options.keep_traces = false;
  const bool strong = a.algo == "strong";
  const SpannerResult result = strong ? spanner_strong(g, a.k, options) : spanner_basic(g, a.k, options);

  std::ostringstream text;
  write_graph(text, list, result.edges);
  write_file_atomic(a.output, text.str());

  RunStats stats;
  stats.n = g.vertex_count();
  stats.m = g.edge_count();
  stats.k = a.k;
  stats.algorithm = a.algo;
  if (result.stats.epsilon > 0.0) {
    stats.epsilon = result.stats.epsilon;
    stats.p_iterations = result.stats.p_iterations;
  }
  stats.spanner_edges = result.edges.size();
  if (g.vertex_count() >= 2)
    stats.bound_ratio = verify_size(g.vertex_count(), g.max_weight(), a.k, result.edges.size(),
                                    strong ? SizeMode::kStrong : SizeMode::kBasic)
                            .ratio;
  stats.wall_time_ms = elapsed_ms(start);
  if (!a.stats.empty()) write_stats(a.stats, stats);

  out << "spanner: " << result.edges.size() << " of " << g.edge_count() << " edges (k=" << a.k
      << ", " << (result.stats.fell_back ? "basic fallback" : result.stats.algorithm) << ") -> "
      << a.output << "\n";
  return kExitOk;
}

int run_verify(const VerifyArgs& a, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  if (a.k < 1) throw ParameterError("k must be at least 1");
  const EdgeList graph_list = read_edge_list_file(a.graph);
  const EdgeList spanner_list = read_edge_list_file(a.spanner);
  // Match on the raw triples, then measure on the (possibly rescaled) graph.
  if (spanner_list.n != graph_list.n)
    throw ContainmentError("spanner has " + std::to_string(spanner_list.n) + " vertices, graph has " +
                           std::to_string(graph_list.n));
  const EdgeSet chosen = match_edges(graph_list.edges, spanner_list.edges);
  const Graph g = to_graph(graph_list, {a.rescale});
  const double bound = 2.0 * a.k - 1.0;
  const StretchReport report = verify_stretch(g, chosen, bound, a.threads);

  RunStats stats;
  stats.n = g.vertex_count();
  stats.m = g.edge_count();
  stats.k = a.k;
  stats.algorithm = "verify";
  stats.spanner_edges = report.spanner_edges;
  stats.max_stretch = report.max_stretch;
  stats.violations = report.violations.size();
  if (g.vertex_count() >= 2)
    stats.bound_ratio = verify_size(g.vertex_count(), g.max_weight(), a.k, report.spanner_edges, SizeMode::kBasic).ratio;
  stats.wall_time_ms = elapsed_ms(start);
  if (!a.stats.empty()) write_stats(a.stats, stats);

  out << "pairs=" << report.finite_pairs << " max_stretch=" << report.max_stretch << " (pair "
      << report.argmax_pair.first << "," << report.argmax_pair.second << ") bound=" << bound
      << " violations=" << report.violations.size() << "\n";
  return report.violations.empty() ? kExitOk : kExitVerificationFailed;
}

int run_stats(const StatsArgs& a, std::ostream& out) {
  const Graph g = to_graph(read_edge_list_file(a.graph), {a.rescale});
  const auto scc = strongly_connected_components(g);
  std::size_t scc_count = 0;
  for (auto label : scc) scc_count = std::max<std::size_t>(scc_count, label + 1);
  const GirthMap girths = compute_girths(g);
  double lo = kInfinity, hi = -kInfinity;
  for (double x : girths.g)
    if (x != kInfinity) {
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
  nlohmann::ordered_json j;
  j["n"] = g.vertex_count();
  j["m"] = g.edge_count();
  j["W"] = g.max_weight();
  j["scc_count"] = scc_count;
  j["min_girth"] = lo == kInfinity ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(lo);
  j["max_girth"] = hi == -kInfinity ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(hi);
  out << j.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Roundtrip spanners of weighted directed graphs", "spanner"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random graph");
  gen_cmd->add_option("--model", gen.model, "gnp-bidirected, gnp-directed, cycle, layered, grid-torus")
      ->required();
  gen_cmd->add_option("--n", gen.n, "Vertex count")->required();
  gen_cmd->add_option("--p", gen.p, "Edge probability");
  gen_cmd->add_option("--wmin", gen.wmin, "Minimum weight (>= 1)");
  gen_cmd->add_option("--wmax", gen.wmax, "Maximum weight");
  gen_cmd->add_option("--seed", gen.seed, "PRNG seed")->required();
  gen_cmd->add_option("--output", gen.output, "Output graph file")->required();

  BuildArgs build;
  auto* build_cmd = app.add_subcommand("build", "Construct a (2k-1)-roundtrip spanner");
  build_cmd->add_option("--input", build.input, "Input graph file")->required();
  build_cmd->add_option("--k", build.k, "Stretch parameter (stretch 2k-1)")->required();
  build_cmd->add_option("--algo", build.algo, "basic or strong")
      ->required()
      ->check(CLI::IsMember({"basic", "strong"}));
  build_cmd->add_option("--output", build.output, "Spanner output file")->required();
  build_cmd->add_option("--stats", build.stats, "Write run statistics as JSON");
  build_cmd->add_flag("--no-delete-long", build.no_delete_long, "Keep long-girth edges in contracted searches");
  build_cmd->add_option("--threads", build.threads, "Worker threads for per-source searches")
      ->check(CLI::PositiveNumber);
  build_cmd->add_flag("--rescale", build.rescale, "Divide weights by the minimum weight");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a spanner's roundtrip stretch against 2k-1");
  verify_cmd->add_option("--graph", verify.graph, "Original graph file")->required();
  verify_cmd->add_option("--spanner", verify.spanner, "Spanner file")->required();
  verify_cmd->add_option("--k", verify.k, "Stretch parameter")->required();
  verify_cmd->add_option("--stats", verify.stats, "Write run statistics as JSON");
  verify_cmd->add_option("--threads", verify.threads, "Worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--rescale", verify.rescale, "Divide weights by the graph's minimum weight");

  StatsArgs stats;
  auto* stats_cmd = app.add_subcommand("stats", "Print n, m, W, SCC count and girth range");
  stats_cmd->add_option("--graph", stats.graph, "Graph file")->required();
  stats_cmd->add_flag("--rescale", stats.rescale, "Divide weights by the minimum weight");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (*gen_cmd) return run_gen(gen, out);
    if (*build_cmd) return run_build(build, out);
    if (*verify_cmd) return run_verify(verify, out);
    if (*stats_cmd) return run_stats(stats, out);
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return kExitInvariantViolation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace rtspan
