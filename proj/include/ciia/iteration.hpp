#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ciia/graph.hpp"
#include "ciia/intensity.hpp"

namespace ciia {

/// Directed weights on adjacent pairs. `weight(u, i)` is the share of u's
/// positive intensity that goes to neighbor i, so each node's outgoing
/// weights sum to 1, or to 0 when none of its edges scored positive.
class WeightMap {
 public:
  WeightMap() = default;

  /// Every arc set to `value` (not normalized); `uniform(g, 1.0)` turns the
  /// weighted scorer into the unweighted one.
  static WeightMap uniform(const Graph& g, double value, std::size_t round = 0);

  /// Weight of arc u->v. The self weight `weight(u, u)` is 1.
  double weight(const Graph& g, NodeId u, NodeId v) const;
  double arc_weight(ArcId a) const noexcept { return arcs_[a]; }
  std::span<const double> arcs() const noexcept { return arcs_; }
  std::size_t round() const noexcept { return round_; }

 private:
  friend WeightMap weights_from_scores(const Graph&, std::span<const EdgeScore>, std::size_t);
  std::vector<double> arcs_;
  std::size_t round_ = 0;
};

/// Clips scores at zero and normalizes them per node over its incident edges.
WeightMap weights_from_scores(const Graph& g, std::span<const EdgeScore> scores,
                              std::size_t round = 1);

/// Weighted parts for edge (i, j).
///
/// A circle keeps its anchor (weight 1) and the neighbors whose weight toward
/// the anchor is positive. With `u` in circle(i), `v` in circle(j), and the
/// overlap O of the two circles:
///
///   actual            sum w_ui w_vj A_uv
///   actual_overlap    1/2 sum_{u,v in O} (w_ui w_vj + w_vi w_uj)/2 A_uv
///   expected          (sum w_ui k_u)(sum w_vj k_v) / 2m
///   expected_overlap  [sum_{u in O} w_ui w_uj k_u^2
///                      + 1/2 sum_{u != v in O} (w_ui w_vj + w_vi w_uj)/2 k_u k_v] / 2m
///
/// k is the plain degree and m the plain edge count in every round.
EdgeScore weighted_ci_edge(const Graph& g, const WeightMap& w, NodeId i, NodeId j);
std::vector<EdgeScore> weighted_ci_all(const Graph& g, const WeightMap& w);

struct IterationTrace {
  /// rounds[0] is the unweighted pass; each later round reweights the previous.
  std::vector<std::vector<EdgeScore>> rounds;
  /// signs[r][e] in {-1, 0, +1} for edge id e.
  std::vector<std::vector<std::int8_t>> signs;
  /// Round index whose ordering and signs repeated the previous round.
  std::size_t convergence_round = 0;
  bool converged = false;
};

inline constexpr std::size_t kDefaultRoundCap = 50;

struct IterationResult {
  std::vector<EdgeScore> scores;  // last computed round
  IterationTrace trace;
};

/// Runs rounds until two consecutive rounds share the sign vector and the
/// descending edge order, or `cap` rounds (including round 0) have run.
IterationResult iterate_to_fixpoint(const Graph& g, std::size_t cap = kDefaultRoundCap);

/// True when both lists name the same edges in the same order.
bool same_order(std::span<const EdgeScore> a, std::span<const EdgeScore> b) noexcept;
std::vector<std::int8_t> sign_vector(const Graph& g, std::span<const EdgeScore> scores);

}  // namespace ciia
