#include "ciia/netgen.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <ostream>

#include "ciia/random.hpp"

namespace ciia {

Graph gen_ba(const BAConfig& config) {
  if (config.m_attach < 1 || config.m_attach >= config.n) {
    throw Error("preferential attachment needs 1 <= m_attach < n");
  }
  if (config.n > std::numeric_limits<NodeId>::max()) throw Error("node count too large");
  Rng rng(config.seed);
  const std::size_t n = config.n;
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(n * config.m_attach);
  std::vector<NodeId> endpoints;  // each node repeated once per incident edge
  endpoints.reserve(2 * n * config.m_attach);

  edges.emplace_back(0, 1);
  endpoints.push_back(0);
  endpoints.push_back(1);

  std::vector<NodeId> targets;
  for (NodeId t = 2; t < n; ++t) {
    const std::size_t want = std::min<std::size_t>(config.m_attach, t);
    targets.clear();
    while (targets.size() < want) {
      const NodeId pick = endpoints[rng.below(endpoints.size())];
      if (std::find(targets.begin(), targets.end(), pick) == targets.end()) targets.push_back(pick);
    }
    for (NodeId v : targets) {
      edges.emplace_back(v, t);
      endpoints.push_back(v);
      endpoints.push_back(t);
    }
  }
  return graph_from_pairs(n, edges);
}

std::pair<double, double> planted_params(std::size_t n, std::size_t groups, double avg_degree,
                                         double ratio) {
  if (groups == 0 || n == 0 || n % groups != 0) {
    throw Error("group count " + std::to_string(groups) + " does not divide node count " +
                std::to_string(n));
  }
  if (!(ratio >= 1.0)) throw Error("ratio must be at least 1");
  if (!(avg_degree >= 0.0)) throw Error("average degree must be non-negative");
  const double block = static_cast<double>(n / groups);
  const double inside = (block - 1.0) * ratio;
  const double outside = static_cast<double>(n) - block;
  const double denom = inside + outside;
  if (avg_degree == 0.0) return {0.0, 0.0};
  if (denom <= 0.0) throw Error("no node pairs available for the requested degree");
  const double p_out = avg_degree / denom;
  const double p_in = ratio * p_out;
  if (p_in > 1.0) {
    throw Error("infeasible planted parameters: p_in = " + std::to_string(p_in) + " exceeds 1");
  }
  return {p_in, p_out};
}

PlantedGraph gen_planted(const PlantedConfig& config) {
  if (config.sizes.empty()) throw Error("planted partition needs at least one block");
  if (!(config.p_out >= 0.0 && config.p_out <= config.p_in && config.p_in <= 1.0)) {
    throw Error("planted partition needs 0 <= p_out <= p_in <= 1");
  }
  std::vector<std::uint32_t> block;
  for (std::uint32_t b = 0; b < config.sizes.size(); ++b) {
    if (config.sizes[b] == 0) throw Error("block sizes must be positive");
    block.insert(block.end(), config.sizes[b], b);
  }
  const std::size_t n = block.size();
  if (n > std::numeric_limits<NodeId>::max()) throw Error("node count too large");

  Rng rng(config.seed);
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      const double p = block[u] == block[v] ? config.p_in : config.p_out;
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
    }
  }
  PlantedGraph out;
  out.graph = graph_from_pairs(n, edges);
  out.truth = Partition::from_assignment(out.graph, block);
  out.block = std::move(block);
  return out;
}

void write_ground_truth(std::ostream& out, const Graph& g, std::span<const std::uint32_t> block) {
  if (block.size() != g.node_count()) throw Error("ground truth does not match graph");
  for (NodeId u = 0; u < g.node_count(); ++u) out << g.label(u) << ' ' << block[u] << '\n';
}

}  // namespace ciia
