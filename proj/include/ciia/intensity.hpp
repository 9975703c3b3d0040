#pragma once

#include <compare>
#include <span>
#include <vector>

#include "ciia/graph.hpp"

namespace ciia {

/// The neighborhood of `anchor` seen from edge (anchor, excluded): the anchor
/// plus its neighbors, minus `excluded`. Members are sorted by id.
struct Circle {
  NodeId anchor;
  NodeId excluded;
  std::vector<NodeId> members;
};

/// The four edge counts behind a connect-intensity score.
///
///   actual            edges crossing the two circles (ordered member pairs)
///   actual_overlap    share of `actual` counted twice through the overlap
///   expected          random-placement estimate of `actual`
///   expected_overlap  share of `expected` counted twice through the overlap
struct IntensityParts {
  double actual = 0.0;
  double actual_overlap = 0.0;
  double expected = 0.0;
  double expected_overlap = 0.0;

  double score() const noexcept { return (actual - actual_overlap) - (expected - expected_overlap); }
};

struct EdgeScore {
  EdgeId edge = 0;
  Edge key{};  // (lo, hi) internal ids
  IntensityParts parts;
  double ci = 0.0;
};

/// Descending by score, ties by ascending (lo, hi).
bool score_before(const EdgeScore& a, const EdgeScore& b) noexcept;
void sort_scores(std::vector<EdgeScore>& scores);

/// Throws `Error` unless (i, j) is an edge.
Circle circle(const Graph& g, NodeId i, NodeId j);

/// Unweighted parts for edge (i, j). Computed in integer arithmetic, so the
/// resulting score is exact up to one final division by 2m.
IntensityParts ci_components(const Graph& g, NodeId i, NodeId j);
EdgeScore ci_edge(const Graph& g, NodeId i, NodeId j);

/// One score per edge, sorted with `score_before`.
std::vector<EdgeScore> ci_all(const Graph& g);

/// Scores reindexed by edge id (`out[e]` is the score of edge e).
std::vector<double> scores_by_edge(const Graph& g, std::span<const EdgeScore> scores);

}  // namespace ciia
