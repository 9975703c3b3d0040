// ciia: community detection, graph generation and benchmark sweeps.

#include <exception>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ciia/bench.hpp"
#include "ciia/detect.hpp"
#include "ciia/fixtures.hpp"
#include "ciia/graph.hpp"
#include "ciia/kernels.hpp"
#include "ciia/louvain.hpp"
#include "ciia/netgen.hpp"
#include "ciia/report.hpp"

namespace {

struct Common {
  bool quiet = false;
  std::string isa = "auto";
};

struct DetectArgs {
  std::string algo;
  std::string input;
  std::uint64_t seed = 0;
  std::size_t restarts = 10;
  std::size_t max_iters = ciia::kDefaultRoundCap;
  std::string output;
  std::string merge_stop = "skip";
  bool no_timing = false;
};

struct GenArgs {
  std::size_t n = 0;
  std::size_t m_attach = 1;
  std::size_t groups = 10;
  double avg_degree = 6.0;
  double ratio = 100.0;
  std::uint64_t seed = 0;
  std::string output;
  std::string truth;
};

struct BenchArgs {
  std::string family;
  std::string sizes;
  std::string algos = "ci,ciia,louvain";
  std::size_t seeds = 1;
  std::uint64_t seed = 0;
  std::size_t m_attach = 1;
  std::size_t groups = 10;
  double avg_degree = 6.0;
  double ratio = 100.0;
  std::size_t max_iters = ciia::kDefaultRoundCap;
  std::string output;
  bool no_timing = false;
};

int run_detect(const DetectArgs& a, const Common& common) {
  const ciia::Graph g = ciia::read_edgelist_file(a.input);
  if (g.edge_count() == 0) throw ciia::Error("input '" + a.input + "' has no edges");
  ciia::AlgoReport report;
  if (a.algo == "louvain") {
    ciia::LouvainConfig config;
    report = ciia::louvain_best_of(g, a.restarts, a.seed, config);
  } else {
    ciia::DetectConfig config;
    config.round_cap = a.max_iters;
    config.policy.stop = a.merge_stop == "halt" ? ciia::StopRule::HaltOnNegative : ciia::StopRule::SkipNegative;
    report = ciia::detect(g, a.algo == "ci" ? ciia::Algorithm::CI : ciia::Algorithm::CIIA, config);
  }
  report.input = a.input;
  if (a.no_timing) report.time_ms = 0.0;
  if (!a.output.empty()) ciia::write_file_atomic(a.output, ciia::report_to_json(report));
  if (!common.quiet) {
    std::cout << "algorithm=" << report.algorithm << " modularity=" << ciia::format_real(report.modularity)
              << " communities=" << report.community_count;
    if (a.algo == "ciia") std::cout << " iterations=" << report.iterations;
    if (report.seed) std::cout << " seed=" << *report.seed;
    std::cout << '\n';
    if (a.output.empty()) std::cout << ciia::report_to_json(report);
  }
  return 0;
}

bool to_stdout(const std::string& path) { return path.empty() || path == "-"; }

// Summaries go to stderr when the graph itself is written to stdout.
std::ostream& summary_stream(const std::string& path) { return to_stdout(path) ? std::cerr : std::cout; }

void write_graph(const ciia::Graph& g, const std::string& path) {
  std::ostringstream text;
  ciia::write_edgelist(text, g);
  if (to_stdout(path)) {
    std::cout << text.str();
  } else {
    ciia::write_file_atomic(path, text.str());
  }
}

int run_gen_ba(const GenArgs& a, const Common& common) {
  const ciia::Graph g = ciia::gen_ba({a.n, a.m_attach, a.seed});
  write_graph(g, a.output);
  if (!common.quiet) summary_stream(a.output) << "n=" << g.node_count() << " m=" << g.edge_count() << '\n';
  return 0;
}

int run_gen_planted(const GenArgs& a, const Common& common) {
  const auto [p_in, p_out] = ciia::planted_params(a.n, a.groups, a.avg_degree, a.ratio);
  ciia::PlantedConfig config;
  config.sizes.assign(a.groups, a.n / a.groups);
  config.p_in = p_in;
  config.p_out = p_out;
  config.seed = a.seed;
  const ciia::PlantedGraph pg = ciia::gen_planted(config);

  std::string truth_path = a.truth;
  if (truth_path.empty() && !to_stdout(a.output)) truth_path = a.output + ".truth";
  std::ostringstream truth;
  ciia::write_ground_truth(truth, pg.graph, pg.block);
  if (!truth_path.empty()) ciia::write_file_atomic(truth_path, truth.str());
  write_graph(pg.graph, a.output);
  if (!common.quiet) {
    std::ostream& out = summary_stream(a.output);
    out << "n=" << pg.graph.node_count() << " m=" << pg.graph.edge_count() << " groups=" << a.groups
        << " p_in=" << ciia::format_real(p_in) << " p_out=" << ciia::format_real(p_out);
    if (!truth_path.empty()) out << " truth=" << truth_path;
    out << '\n';
  }
  return 0;
}

int run_bench(const BenchArgs& a, const Common& common) {
  ciia::BenchSpec spec;
  spec.family = ciia::parse_family(a.family);
  spec.sizes = ciia::parse_size_range(a.sizes);
  spec.algos = ciia::parse_algo_list(a.algos);
  spec.seeds = a.seeds;
  spec.first_seed = a.seed;
  spec.m_attach = a.m_attach;
  spec.groups = a.groups;
  spec.avg_degree = a.avg_degree;
  spec.ratio = a.ratio;
  spec.round_cap = a.max_iters;
  spec.timing = !a.no_timing;
  const auto rows = ciia::run_bench(spec);
  std::ostringstream csv;
  ciia::write_bench_csv(csv, rows);
  if (to_stdout(a.output)) {
    std::cout << csv.str();
  } else {
    ciia::write_file_atomic(a.output, csv.str());
    if (!common.quiet) std::cout << "rows=" << rows.size() << " output=" << a.output << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Community detection by connect intensity, with a Louvain baseline"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(ciia::kToolVersion));

  Common common;
  app.add_flag("-q,--quiet", common.quiet, "Suppress the summary on standard output");
  app.add_option("--isa", common.isa, "Reduction kernels: auto, scalar or avx2")
      ->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  DetectArgs da;
  auto* detect = app.add_subcommand("detect", "Detect communities in an edge-list file");
  detect->add_option("--algo", da.algo, "ci, ciia or louvain")
      ->required()
      ->check(CLI::IsMember({"ci", "ciia", "louvain"}));
  detect->add_option("--input", da.input, "Edge-list path")->required();
  detect->add_option("--seed", da.seed, "First Louvain seed");
  detect->add_option("--restarts", da.restarts, "Louvain runs; the best is kept")
      ->check(CLI::PositiveNumber);
  detect->add_option("--max-iters", da.max_iters, "Scoring rounds for ciia, counting the unweighted one")
      ->check(CLI::PositiveNumber);
  detect->add_option("--merge-stop", da.merge_stop, "On a negative gain: skip the edge or halt")
      ->check(CLI::IsMember({"skip", "halt"}));
  detect->add_option("-o,--output", da.output, "Write the JSON report here");
  detect->add_flag("--no-timing", da.no_timing, "Report time_ms as 0");

  GenArgs ga;
  auto* gen = app.add_subcommand("gen", "Generate a synthetic graph");
  gen->require_subcommand(1);
  auto* ba = gen->add_subcommand("ba", "Preferential attachment");
  ba->add_option("--n", ga.n, "Node count")->required();
  ba->add_option("--m-attach", ga.m_attach, "Edges per arriving node");
  ba->add_option("--seed", ga.seed, "Random seed");
  ba->add_option("-o,--output", ga.output, "Edge-list path (default: standard output)");
  auto* planted = gen->add_subcommand("planted", "Planted partition");
  planted->add_option("--n", ga.n, "Node count")->required();
  planted->add_option("--groups", ga.groups, "Number of equal blocks");
  planted->add_option("--avg-degree", ga.avg_degree, "Expected mean degree");
  planted->add_option("--ratio", ga.ratio, "p_in / p_out");
  planted->add_option("--seed", ga.seed, "Random seed");
  planted->add_option("-o,--output", ga.output, "Edge-list path (default: standard output)");
  planted->add_option("--truth", ga.truth, "Ground-truth path (default: OUTPUT.truth)");

  BenchArgs bargs;
  auto* bench = app.add_subcommand("bench", "Compare algorithms on generated graphs");
  bench->add_option("--family", bargs.family, "ba or planted")->required()->check(CLI::IsMember({"ba", "planted"}));
  bench->add_option("--sizes", bargs.sizes, "Node counts as FROM:TO:STEP or a single value")->required();
  bench->add_option("--algos", bargs.algos, "Comma-separated subset of ci,ciia,louvain");
  bench->add_option("--seeds", bargs.seeds, "Seeds per size")->check(CLI::PositiveNumber);
  bench->add_option("--seed", bargs.seed, "First seed");
  bench->add_option("--m-attach", bargs.m_attach, "ba: edges per arriving node");
  bench->add_option("--groups", bargs.groups, "planted: number of blocks");
  bench->add_option("--avg-degree", bargs.avg_degree, "planted: expected mean degree");
  bench->add_option("--ratio", bargs.ratio, "planted: p_in / p_out");
  bench->add_option("--max-iters", bargs.max_iters, "Scoring rounds for ciia")->check(CLI::PositiveNumber);
  bench->add_option("-o,--output", bargs.output, "CSV path (default: standard output)");
  bench->add_flag("--no-timing", bargs.no_timing, "Write time_ms as 0");

  auto* selftest = app.add_subcommand("selftest", "Check the built-in reference networks");

  CLI11_PARSE(app, argc, argv);

  try {
    if (common.isa != "auto") ciia::kernels::select(ciia::kernels::parse_isa(common.isa));
    if (*detect) return run_detect(da, common);
    if (*ba) return run_gen_ba(ga, common);
    if (*planted) return run_gen_planted(ga, common);
    if (*bench) return run_bench(bargs, common);
    if (*selftest) return ciia::fixtures::run_selftest(std::cout) ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
