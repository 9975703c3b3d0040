#include "ciia/louvain.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>

namespace ciia {

WorkingGraph::WorkingGraph(const Graph& g) {
  const std::size_t n = g.node_count();
  offsets_.assign(n + 1, 0);
  for (NodeId u = 0; u < n; ++u) offsets_[u + 1] = offsets_[u] + g.degree(u);
  targets_.assign(g.targets().begin(), g.targets().end());
  weights_.assign(targets_.size(), 1.0);
  self_.assign(n, 0.0);
  finish();
}

WorkingGraph WorkingGraph::from_parts(std::vector<std::vector<std::pair<std::uint32_t, double>>> adjacency,
                                      std::vector<double> self_loops) {
  if (adjacency.size() != self_loops.size()) throw Error("adjacency and self-loop sizes differ");
  WorkingGraph wg;
  const std::size_t n = adjacency.size();
  wg.offsets_.assign(n + 1, 0);
  for (std::size_t u = 0; u < n; ++u) {
    std::sort(adjacency[u].begin(), adjacency[u].end());
    wg.offsets_[u + 1] = wg.offsets_[u] + adjacency[u].size();
    for (auto [v, w] : adjacency[u]) {
      if (v == u) throw Error("working graph adjacency contains a loop");
      if (v >= n) throw Error("working graph neighbor out of range");
      wg.targets_.push_back(v);
      wg.weights_.push_back(w);
    }
  }
  wg.self_ = std::move(self_loops);
  wg.finish();
  return wg;
}

void WorkingGraph::finish() {
  const std::size_t n = self_.size();
  strength_.assign(n, 0.0);
  total_ = 0.0;
  for (std::size_t u = 0; u < n; ++u) {
    double s = self_[u];
    for (std::size_t a = offsets_[u]; a < offsets_[u + 1]; ++a) s += weights_[a];
    strength_[u] = s;
    total_ += s;
  }
}

double working_modularity(const WorkingGraph& wg, std::span<const std::uint32_t> community) {
  const std::size_t n = wg.node_count();
  if (community.size() != n) throw Error("community vector does not match working graph");
  const double total = wg.total_weight();
  if (total <= 0.0) throw Error("modularity is undefined for a graph without edges");
  std::vector<double> inside(n, 0.0), tot(n, 0.0);
  for (std::uint32_t u = 0; u < n; ++u) {
    const std::uint32_t c = community[u];
    inside[c] += wg.self_loop(u);
    tot[c] += wg.strength(u);
    const auto nb = wg.neighbors(u);
    const auto w = wg.weights(u);
    for (std::size_t t = 0; t < nb.size(); ++t) {
      if (community[nb[t]] == c) inside[c] += w[t];
    }
  }
  double q = 0.0;
  for (std::size_t c = 0; c < n; ++c) {
    const double share = tot[c] / total;
    q += inside[c] / total - share * share;
  }
  return q;
}

LocalMoveResult local_move_pass(const WorkingGraph& wg, std::vector<std::uint32_t>& community, Rng& rng,
                                const LouvainConfig& config) {
  const std::size_t n = wg.node_count();
  if (community.size() != n) throw Error("community vector does not match working graph");
  LocalMoveResult result;
  const double total = wg.total_weight();
  if (n == 0 || total <= 0.0) return result;

  std::vector<double> tot(n, 0.0);
  for (std::uint32_t u = 0; u < n; ++u) tot[community[u]] += wg.strength(u);

  std::vector<double> link(n, 0.0);
  std::vector<std::uint32_t> touched;
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);

  // Gain of inserting an isolated node of strength k into community c.
  const auto gain = [&](std::uint32_t c, double k) { return 2.0 * (link[c] - tot[c] * k / total) / total; };

  while (result.sweeps < config.max_sweeps) {
    ++result.sweeps;
    rng.shuffle(std::span(order));
    std::size_t moved = 0;
    for (std::uint32_t u : order) {
      const std::uint32_t own = community[u];
      const double k = wg.strength(u);
      const auto nb = wg.neighbors(u);
      const auto w = wg.weights(u);
      touched.clear();
      touched.push_back(own);
      for (std::size_t t = 0; t < nb.size(); ++t) {
        const std::uint32_t c = community[nb[t]];
        if (link[c] == 0.0 && std::find(touched.begin(), touched.end(), c) == touched.end()) {
          touched.push_back(c);
        }
        link[c] += w[t];
      }
      tot[own] -= k;
      const double stay = gain(own, k);
      std::uint32_t best = own;
      double best_gain = stay;
      for (std::uint32_t c : touched) {
        const double gc = gain(c, k);
        if (gc > best_gain || (gc == best_gain && c < best)) {
          best = c;
          best_gain = gc;
        }
      }
      if (best != own && best_gain - stay > config.min_gain) {
        community[u] = best;
        tot[best] += k;
        ++moved;
      } else {
        tot[own] += k;
      }
      for (std::uint32_t c : touched) link[c] = 0.0;
    }
    result.moves += moved;
    if (moved == 0) break;
  }
  result.improved = result.moves > 0;
  return result;
}

WorkingGraph aggregate_graph(const WorkingGraph& wg, std::span<const std::uint32_t> community,
                             std::vector<std::uint32_t>* compact_out) {
  const std::size_t n = wg.node_count();
  if (community.size() != n) throw Error("community vector does not match working graph");
  const std::uint32_t unset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> compact(n, unset);
  std::uint32_t next = 0;
  for (std::uint32_t u = 0; u < n; ++u) {
    if (compact[community[u]] == unset) compact[community[u]] = next++;
  }
  std::vector<std::map<std::uint32_t, double>> cross(next);
  std::vector<double> self(next, 0.0);
  for (std::uint32_t u = 0; u < n; ++u) {
    const std::uint32_t cu = compact[community[u]];
    self[cu] += wg.self_loop(u);
    const auto nb = wg.neighbors(u);
    const auto w = wg.weights(u);
    for (std::size_t t = 0; t < nb.size(); ++t) {
      const std::uint32_t cv = compact[community[nb[t]]];
      if (cv == cu) {
        self[cu] += w[t];  // each internal edge is seen from both ends
      } else {
        cross[cu][cv] += w[t];
      }
    }
  }
  std::vector<std::vector<std::pair<std::uint32_t, double>>> adjacency(next);
  for (std::uint32_t c = 0; c < next; ++c) adjacency[c].assign(cross[c].begin(), cross[c].end());
  if (compact_out) {
    compact_out->assign(n, 0);
    for (std::uint32_t u = 0; u < n; ++u) (*compact_out)[u] = compact[community[u]];
  }
  return WorkingGraph::from_parts(std::move(adjacency), std::move(self));
}

AlgoReport louvain(const Graph& g, const LouvainConfig& config) {
  if (g.edge_count() == 0) throw Error("cannot detect communities in a graph without edges");
  if (config.min_gain < 0.0) throw Error("minimum gain must be non-negative");
  const auto start = std::chrono::steady_clock::now();

  AlgoReport report;
  report.algorithm = "louvain";
  report.nodes = g.node_count();
  report.edges = g.edge_count();
  report.seed = config.seed;

  Rng rng(config.seed);
  WorkingGraph wg(g);
  std::vector<std::uint32_t> node_comm(g.node_count());
  std::iota(node_comm.begin(), node_comm.end(), 0u);

  for (std::size_t level = 0; level < config.max_levels; ++level) {
    std::vector<std::uint32_t> community(wg.node_count());
    std::iota(community.begin(), community.end(), 0u);
    const LocalMoveResult moved = local_move_pass(wg, community, rng, config);
    if (!moved.improved) break;
    report.level_modularity.push_back(working_modularity(wg, community));
    std::vector<std::uint32_t> compact;
    wg = aggregate_graph(wg, community, &compact);
    for (auto& c : node_comm) c = compact[c];
    ++report.iterations;
  }
  report.converged = true;
  report.partition = Partition::from_assignment(g, node_comm);
  report.modularity = modularity(g, report.partition);
  set_communities(report, g);
  report.time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

AlgoReport louvain_best_of(const Graph& g, std::size_t restarts, std::uint64_t first_seed,
                           LouvainConfig config) {
  if (restarts == 0) throw Error("at least one Louvain restart is required");
  AlgoReport best;
  double elapsed = 0.0;
  for (std::size_t r = 0; r < restarts; ++r) {
    config.seed = first_seed + r;
    AlgoReport run = louvain(g, config);
    elapsed += run.time_ms;
    if (r == 0 || run.modularity > best.modularity) best = std::move(run);
  }
  best.time_ms = elapsed;
  return best;
}

}  // namespace ciia
