#include "ciia/intensity.hpp"

#include <algorithm>
#include <cstdint>

namespace ciia {

namespace {

void require_edge(const Graph& g, NodeId i, NodeId j) {
  if (!g.has_edge(i, j)) {
    throw Error("(" + std::to_string(i) + ", " + std::to_string(j) + ") is not an edge");
  }
}

// Reusable membership marks for scoring many edges of one graph.
class UnweightedScorer {
 public:
  explicit UnweightedScorer(const Graph& g) : g_(g), in_i_(g.node_count(), 0), in_j_(g.node_count(), 0) {}

  struct Result {
    IntensityParts parts;
    double ci;
  };

  Result score(NodeId i, NodeId j) {
    mark(in_i_, i, j, 1);
    mark(in_j_, j, i, 1);

    // Integer totals: K = circle degree sums, D/P = overlap square/plain sums.
    std::int64_t k_i = 0, k_j = 0, sq = 0, plain = 0;
    std::int64_t overlap_arcs = 0;
    std::vector<NodeId>& overlap = overlap_;
    overlap.clear();
    for_members(i, j, [&](NodeId u) {
      k_i += g_.degree(u);
      if (in_j_[u]) overlap.push_back(u);
    });
    for_members(j, i, [&](NodeId v) { k_j += g_.degree(v); });

    // Ordered pairs (u in S_i, v in S_j) with u ~ v, walking the cheaper side.
    const bool walk_i = k_i <= k_j;
    const std::vector<char>& other = walk_i ? in_j_ : in_i_;
    std::int64_t crossing = 0;
    for_members(walk_i ? i : j, walk_i ? j : i, [&](NodeId u) {
      for (NodeId v : g_.neighbors(u)) crossing += other[v];
    });

    for (NodeId u : overlap) {
      const std::int64_t k = g_.degree(u);
      sq += k * k;
      plain += k;
      for (NodeId v : g_.neighbors(u)) overlap_arcs += in_i_[v] & in_j_[v];
    }

    mark(in_i_, i, j, 0);
    mark(in_j_, j, i, 0);

    const double two_m = 2.0 * static_cast<double>(g_.edge_count());
    Result r{};
    IntensityParts& p = r.parts;
    p.actual = static_cast<double>(crossing);
    p.actual_overlap = static_cast<double>(overlap_arcs / 2);
    p.expected = static_cast<double>(k_i * k_j) / two_m;
    // sum k_u^2 + 1/2 sum_{u != v} k_u k_v = (D + P^2) / 2, always an integer.
    p.expected_overlap = static_cast<double>((sq + plain * plain) / 2) / two_m;
    // 2m * score is an integer; dividing once keeps equal scores bit-equal.
    const std::int64_t numerator = 2 * static_cast<std::int64_t>(g_.edge_count()) *
                                       (crossing - overlap_arcs / 2) -
                                   (k_i * k_j - (sq + plain * plain) / 2);
    r.ci = static_cast<double>(numerator) / two_m;
    return r;
  }

 private:
  template <class F>
  void for_members(NodeId anchor, NodeId excluded, F&& f) const {
    f(anchor);
    for (NodeId v : g_.neighbors(anchor)) {
      if (v != excluded) f(v);
    }
  }

  void mark(std::vector<char>& marks, NodeId anchor, NodeId excluded, char value) const {
    for_members(anchor, excluded, [&](NodeId u) { marks[u] = value; });
  }

  const Graph& g_;
  std::vector<char> in_i_, in_j_;
  std::vector<NodeId> overlap_;
};

EdgeScore make_score(const Graph& g, UnweightedScorer& scorer, EdgeId e) {
  const Edge key = g.edge(e);
  EdgeScore s;
  s.edge = e;
  s.key = key;
  const auto r = scorer.score(key.lo, key.hi);
  s.parts = r.parts;
  s.ci = r.ci;
  return s;
}

}  // namespace

bool score_before(const EdgeScore& a, const EdgeScore& b) noexcept {
  if (a.ci != b.ci) return a.ci > b.ci;
  return a.key < b.key;
}

void sort_scores(std::vector<EdgeScore>& scores) {
  std::sort(scores.begin(), scores.end(), score_before);
}

Circle circle(const Graph& g, NodeId i, NodeId j) {
  require_edge(g, i, j);
  Circle c{i, j, {}};
  c.members.reserve(g.degree(i));
  bool placed = false;
  for (NodeId v : g.neighbors(i)) {
    if (!placed && i < v) {
      c.members.push_back(i);
      placed = true;
    }
    if (v != j) c.members.push_back(v);
  }
  if (!placed) c.members.push_back(i);
  return c;
}

IntensityParts ci_components(const Graph& g, NodeId i, NodeId j) {
  require_edge(g, i, j);
  UnweightedScorer scorer(g);
  return scorer.score(i, j).parts;
}

EdgeScore ci_edge(const Graph& g, NodeId i, NodeId j) {
  require_edge(g, i, j);
  UnweightedScorer scorer(g);
  EdgeScore s;
  s.edge = g.edge_id(i, j);
  s.key = g.edge(s.edge);
  const auto r = scorer.score(i, j);
  s.parts = r.parts;
  s.ci = r.ci;
  return s;
}

std::vector<EdgeScore> ci_all(const Graph& g) {
  std::vector<EdgeScore> out;
  out.reserve(g.edge_count());
  UnweightedScorer scorer(g);
  for (EdgeId e = 0; e < g.edge_count(); ++e) out.push_back(make_score(g, scorer, e));
  sort_scores(out);
  return out;
}

std::vector<double> scores_by_edge(const Graph& g, std::span<const EdgeScore> scores) {
  if (scores.size() != g.edge_count()) throw Error("score list does not cover every edge");
  std::vector<double> out(g.edge_count(), 0.0);
  std::vector<char> seen(g.edge_count(), 0);
  for (const EdgeScore& s : scores) {
    if (s.edge >= g.edge_count() || seen[s.edge]) throw Error("score list does not cover every edge");
    seen[s.edge] = 1;
    out[s.edge] = s.ci;
  }
  return out;
}

}  // namespace ciia
