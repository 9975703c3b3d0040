#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "ciia/graph.hpp"
#include "ciia/partition.hpp"

namespace ciia {

/// Preferential attachment: nodes arrive one at a time and attach to
/// `m_attach` distinct earlier nodes drawn with probability proportional to
/// degree.
struct BAConfig {
  std::size_t n = 0;
  std::size_t m_attach = 1;
  std::uint64_t seed = 0;
};

/// Planted-partition graph: consecutive node blocks of the given sizes, each
/// intra-block pair joined with probability p_in and each inter-block pair
/// with p_out. (Also known loosely as an "ER benchmark".)
struct PlantedConfig {
  std::vector<std::size_t> sizes;
  double p_in = 0.0;
  double p_out = 0.0;
  std::uint64_t seed = 0;
};

struct PlantedGraph {
  Graph graph;
  Partition truth;
  std::vector<std::uint32_t> block;  // block index per node
};

/// Node 0 starts alone and node 1 attaches to it; every later node t draws
/// targets from the endpoint multiset (with replacement, discarding repeats)
/// until it has min(m_attach, t) distinct ones. Labels are "0".."n-1".
/// Throws unless 1 <= m_attach < n.
Graph gen_ba(const BAConfig& config);

/// Solves p_in = ratio * p_out and
/// (n/groups - 1) p_in + (n - n/groups) p_out = avg_degree.
/// Throws when groups does not divide n, ratio < 1, or p_in would exceed 1.
std::pair<double, double> planted_params(std::size_t n, std::size_t groups, double avg_degree,
                                         double ratio);

/// Isolated nodes are kept. Throws unless 0 <= p_out <= p_in <= 1 and every
/// size is positive.
PlantedGraph gen_planted(const PlantedConfig& config);

/// "label community_id" per node, in node id order.
void write_ground_truth(std::ostream& out, const Graph& g, std::span<const std::uint32_t> block);

}  // namespace ciia
