#include "ciia/iteration.hpp"

#include <algorithm>

#include "ciia/kernels.hpp"

namespace ciia {

WeightMap WeightMap::uniform(const Graph& g, double value, std::size_t round) {
  WeightMap w;
  w.arcs_.assign(2 * g.edge_count(), value);
  w.round_ = round;
  return w;
}

double WeightMap::weight(const Graph& g, NodeId u, NodeId v) const {
  if (u == v) return 1.0;
  const ArcId a = g.find_arc(u, v);
  if (a == Graph::npos) throw Error("weight requested for a non-adjacent pair");
  return arcs_[a];
}

WeightMap weights_from_scores(const Graph& g, std::span<const EdgeScore> scores, std::size_t round) {
  const std::vector<double> ci = scores_by_edge(g, scores);
  WeightMap w;
  w.arcs_.assign(2 * g.edge_count(), 0.0);
  w.round_ = round;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    double total = 0.0;
    for (ArcId a = g.arc_begin(u); a < g.arc_end(u); ++a) total += std::max(ci[g.arc_edge(a)], 0.0);
    if (total <= 0.0) continue;
    for (ArcId a = g.arc_begin(u); a < g.arc_end(u); ++a) {
      w.arcs_[a] = std::max(ci[g.arc_edge(a)], 0.0) / total;
    }
  }
  return w;
}

namespace {

class WeightedScorer {
 public:
  WeightedScorer(const Graph& g, const WeightMap& w)
      : g_(g), w_(w), tab_i_(g.node_count(), 0.0), tab_j_(g.node_count(), 0.0), tab_o_(g.node_count(), 0.0) {
    if (w.arcs().size() != 2 * g.edge_count()) throw Error("weight map does not match graph");
  }

  IntensityParts parts(NodeId i, NodeId j) {
    const Side& si = collect(i, j, tab_i_, side_i_);
    const Side& sj = collect(j, i, tab_j_, side_j_);

    // Overlap: members of circle(i) that also carry weight in circle(j).
    ov_i_.clear();
    ov_j_.clear();
    ov_k_.clear();
    ov_ksq_.clear();
    ov_nodes_.clear();
    for (std::size_t t = 0; t < si.nodes.size(); ++t) {
      const NodeId u = si.nodes[t];
      if (tab_j_[u] > 0.0) {
        ov_nodes_.push_back(u);
        ov_i_.push_back(si.weights[t]);
        ov_j_.push_back(tab_j_[u]);
        const double k = g_.degrees_real()[u];
        ov_k_.push_back(k);
        ov_ksq_.push_back(k * k);
      }
    }

    // actual: walk circle(i), gathering circle(j) weights over each member's neighbors.
    gathered_.clear();
    for (NodeId u : si.nodes) gathered_.push_back(kernels::gather_sum(g_.neighbors(u), tab_j_.data()));
    const double actual = kernels::dot(si.weights, gathered_);

    for (std::size_t t = 0; t < ov_nodes_.size(); ++t) tab_o_[ov_nodes_[t]] = ov_j_[t];
    gathered_.clear();
    for (NodeId u : ov_nodes_) gathered_.push_back(kernels::gather_sum(g_.neighbors(u), tab_o_.data()));
    const double actual_overlap = 0.5 * kernels::dot(ov_i_, gathered_);
    for (NodeId u : ov_nodes_) tab_o_[u] = 0.0;

    const double two_m = 2.0 * static_cast<double>(g_.edge_count());
    const double mass_i = kernels::dot(si.weights, si.degrees);
    const double mass_j = kernels::dot(sj.weights, sj.degrees);
    const double diag = kernels::dot3(ov_i_, ov_j_, ov_ksq_);
    const double plain_i = kernels::dot(ov_i_, ov_k_);
    const double plain_j = kernels::dot(ov_j_, ov_k_);
    // Off-diagonal sum collapses to (P_i P_j - D) / 2 by symmetry of the pair average.
    const double overlap_mass = diag + 0.5 * (plain_i * plain_j - diag);

    for (NodeId u : si.nodes) tab_i_[u] = 0.0;
    for (NodeId v : sj.nodes) tab_j_[v] = 0.0;

    IntensityParts p;
    p.actual = actual;
    p.actual_overlap = actual_overlap;
    p.expected = mass_i * mass_j / two_m;
    p.expected_overlap = overlap_mass / two_m;
    return p;
  }

 private:
  struct Side {
    std::vector<NodeId> nodes;
    std::vector<double> weights;
    std::vector<double> degrees;
  };

  // Circle members with positive weight toward `anchor`, mirrored into `table`.
  const Side& collect(NodeId anchor, NodeId excluded, std::vector<double>& table, Side& side) {
    auto& [nodes, weights, degrees] = side;
    nodes.clear();
    weights.clear();
    degrees.clear();
    nodes.push_back(anchor);
    weights.push_back(1.0);
    degrees.push_back(g_.degrees_real()[anchor]);
    table[anchor] = 1.0;
    for (ArcId a = g_.arc_begin(anchor); a < g_.arc_end(anchor); ++a) {
      const NodeId u = g_.arc_target(a);
      if (u == excluded) continue;
      const double wu = w_.arc_weight(g_.arc_reverse(a));
      if (wu <= 0.0) continue;
      nodes.push_back(u);
      weights.push_back(wu);
      degrees.push_back(g_.degrees_real()[u]);
      table[u] = wu;
    }
    return side;
  }

  const Graph& g_;
  const WeightMap& w_;
  std::vector<double> tab_i_, tab_j_, tab_o_;
  Side side_i_, side_j_;
  std::vector<NodeId> ov_nodes_;
  std::vector<double> ov_i_, ov_j_, ov_k_, ov_ksq_, gathered_;
};

}  // namespace

EdgeScore weighted_ci_edge(const Graph& g, const WeightMap& w, NodeId i, NodeId j) {
  if (!g.has_edge(i, j)) {
    throw Error("(" + std::to_string(i) + ", " + std::to_string(j) + ") is not an edge");
  }
  WeightedScorer scorer(g, w);
  EdgeScore s;
  s.edge = g.edge_id(i, j);
  s.key = g.edge(s.edge);
  s.parts = scorer.parts(i, j);
  s.ci = s.parts.score();
  return s;
}

std::vector<EdgeScore> weighted_ci_all(const Graph& g, const WeightMap& w) {
  WeightedScorer scorer(g, w);
  std::vector<EdgeScore> out;
  out.reserve(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    EdgeScore s;
    s.edge = e;
    s.key = g.edge(e);
    s.parts = scorer.parts(s.key.lo, s.key.hi);
    s.ci = s.parts.score();
    out.push_back(s);
  }
  sort_scores(out);
  return out;
}

bool same_order(std::span<const EdgeScore> a, std::span<const EdgeScore> b) noexcept {
  if (a.size() != b.size()) return false;
  for (std::size_t t = 0; t < a.size(); ++t) {
    if (a[t].edge != b[t].edge) return false;
  }
  return true;
}

std::vector<std::int8_t> sign_vector(const Graph& g, std::span<const EdgeScore> scores) {
  std::vector<std::int8_t> out(g.edge_count(), 0);
  for (const EdgeScore& s : scores) out[s.edge] = static_cast<std::int8_t>((s.ci > 0.0) - (s.ci < 0.0));
  return out;
}

IterationResult iterate_to_fixpoint(const Graph& g, std::size_t cap) {
  if (g.edge_count() == 0) throw Error("cannot score a graph without edges");
  if (cap == 0) throw Error("round cap must be at least 1");
  IterationResult result;
  IterationTrace& trace = result.trace;
  trace.rounds.push_back(ci_all(g));
  trace.signs.push_back(sign_vector(g, trace.rounds.back()));
  while (trace.rounds.size() < cap) {
    const std::size_t round = trace.rounds.size();
    const WeightMap w = weights_from_scores(g, trace.rounds.back(), round);
    std::vector<EdgeScore> next = weighted_ci_all(g, w);
    std::vector<std::int8_t> signs = sign_vector(g, next);
    const bool stable = signs == trace.signs.back() && same_order(next, trace.rounds.back());
    trace.rounds.push_back(std::move(next));
    trace.signs.push_back(std::move(signs));
    if (stable) {
      trace.converged = true;
      trace.convergence_round = round;
      break;
    }
  }
  result.scores = trace.rounds.back();
  return result;
}

}  // namespace ciia
