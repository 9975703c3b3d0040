#pragma once

#include <string>
#include <string_view>

#include "ciia/graph.hpp"
#include "ciia/iteration.hpp"
#include "ciia/merge.hpp"
#include "ciia/report.hpp"

namespace ciia {

enum class Algorithm { CI, CIIA };

struct DetectConfig {
  MergePolicy policy{};
  std::size_t round_cap = kDefaultRoundCap;
  std::string input;  // copied into the report as-is
};

/// CI: one unweighted scoring pass, then the greedy merge. CIIA: reweighted
/// scoring to a fixpoint (or the round cap), then the greedy merge.
AlgoReport detect(const Graph& g, Algorithm algo, const DetectConfig& config = {});

std::string_view algorithm_name(Algorithm algo) noexcept;

}  // namespace ciia
