#pragma once

// Reference networks compiled into the library, with their reference scores
// and modularity values. Used by `ciia selftest` and the test suites.

#include <array>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ciia/graph.hpp"

namespace ciia::fixtures {

struct LabelledScore {
  std::string_view a;
  std::string_view b;
  double ci;
};

/// Florentine families network (15 nodes, 20 edges) with families numbered
/// 1..15. Edge lines are in descending score order.
std::string_view florentine_numbered_text();
Graph florentine_numbered();
/// Unweighted scores for every edge, highest first.
std::span<const LabelledScore> florentine_numbered_scores();

/// Edge (2,4) decomposition: actual, actual_overlap, expected, expected_overlap.
inline constexpr std::array<double, 4> kFlorentinePair24Parts{4.0, 0.0, 4.25, 0.225};
inline constexpr double kFlorentineCiModularity = 0.398750;

/// Ten-node, sixteen-edge example used to illustrate reweighting.
std::string_view ten_node_text();
Graph ten_node();
/// rounds()[0] is the unweighted score list, [1..3] the first three
/// reweighting rounds, each highest first. Reweighted rounds are given to four decimals.
std::span<const std::vector<LabelledScore>> ten_node_rounds();

inline constexpr double kTenNodeCiModularity = 0.21875;
inline constexpr double kTenNodeCiiaModularity = 0.283203125;
inline constexpr std::size_t kTenNodeIntraEdges = 10;
inline constexpr std::size_t kTenNodeInterEdges = 6;

/// Edge (7,8) across the first three reweighting rounds.
inline constexpr std::array<double, 3> kTenNodePair78Rounds{0.3901, 0.29974, 0.30419};

/// Runs every embedded check, printing one line per fixture. Returns true
/// when all pass. Output is deterministic.
bool run_selftest(std::ostream& out);

}  // namespace ciia::fixtures
