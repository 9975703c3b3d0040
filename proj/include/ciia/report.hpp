#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ciia/graph.hpp"
#include "ciia/iteration.hpp"
#include "ciia/merge.hpp"
#include "ciia/partition.hpp"

namespace ciia {

inline constexpr const char* kToolVersion = "0.1.0";

/// Result of one community-detection run.
///
/// Only the fields above `partition` are serialized. The JSON document is:
///
///   {"tool": "ciia", "version": str, "algorithm": "ci"|"ciia"|"louvain",
///    "input": str, "nodes": int, "edges": int, "modularity": float,
///    "community_count": int, "communities": [[label, ...], ...],
///    "iterations": int, "converged": bool, "seed": int|null,
///    "time_ms": float}
///
/// Communities are listed by smallest member id, members in id order.
struct AlgoReport {
  std::string algorithm;
  std::string input;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  double modularity = 0.0;
  std::size_t community_count = 0;
  std::vector<std::vector<std::string>> communities;
  std::size_t iterations = 0;
  bool converged = false;
  std::optional<std::uint64_t> seed;
  double time_ms = 0.0;
  std::string version = kToolVersion;

  Partition partition;
  std::optional<IterationTrace> trace;
  std::vector<MergeStep> merge_log;
  std::vector<double> level_modularity;  // Louvain: Q after each level
};

/// Fills `communities` and `community_count` from `partition`.
void set_communities(AlgoReport& report, const Graph& g);

std::string report_to_json(const AlgoReport& report, int indent = 2);
/// Parses the serialized fields only.
AlgoReport report_from_json(const std::string& text);

/// Modularity of the report's communities on `g`, recomputed from labels.
/// Throws if the communities do not partition the graph's label set.
double report_modularity(const Graph& g, const AlgoReport& report);

struct BenchRow {
  std::string family;
  std::size_t n = 0;
  std::size_t m = 0;
  std::string algo;
  std::uint64_t seed = 0;
  double modularity = 0.0;
  double time_ms = 0.0;
  std::size_t iterations = 0;
};

inline constexpr const char* kBenchCsvHeader = "family,n,m,algo,seed,modularity,time_ms,iterations";

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

/// Shortest text that reads back to the same double.
std::string format_real(double value);

/// Writes `contents` to `path` through a temporary sibling and a rename, so a
/// failed run never leaves a partial file behind.
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace ciia
