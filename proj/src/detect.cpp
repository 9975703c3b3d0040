#include "ciia/detect.hpp"

#include <chrono>

namespace ciia {

std::string_view algorithm_name(Algorithm algo) noexcept {
  return algo == Algorithm::CI ? "ci" : "ciia";
}

AlgoReport detect(const Graph& g, Algorithm algo, const DetectConfig& config) {
  if (g.edge_count() == 0) throw Error("cannot detect communities in a graph without edges");
  const auto start = std::chrono::steady_clock::now();

  AlgoReport report;
  report.algorithm = std::string(algorithm_name(algo));
  report.input = config.input;
  report.nodes = g.node_count();
  report.edges = g.edge_count();

  std::vector<EdgeScore> scores;
  if (algo == Algorithm::CI) {
    scores = ci_all(g);
    report.converged = true;
  } else {
    IterationResult it = iterate_to_fixpoint(g, config.round_cap);
    scores = std::move(it.scores);
    report.iterations = it.trace.rounds.size() - 1;
    report.converged = it.trace.converged;
    report.trace = std::move(it.trace);
  }
  MergeResult merged = greedy_merge(g, scores, config.policy);

  report.partition = std::move(merged.partition);
  report.merge_log = std::move(merged.log);
  report.modularity = merged.modularity;
  set_communities(report, g);
  report.time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace ciia
