#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ciia/graph.hpp"
#include "ciia/intensity.hpp"
#include "ciia/partition.hpp"

namespace ciia {

/// What the walk does when a merge would lower modularity.
enum class StopRule {
  SkipNegative,    // reject the merge and keep walking
  HaltOnNegative,  // stop the whole walk
};

/// What the walk does when a merge leaves modularity unchanged.
enum class ZeroGainRule { Skip, Accept, Halt };

enum class TieBreak {
  Lexicographic,  // equal scores in ascending (lo, hi) order
  SeededRandom,   // equal scores shuffled with `tie_seed`
};

struct MergePolicy {
  StopRule stop = StopRule::SkipNegative;
  ZeroGainRule zero_gain = ZeroGainRule::Skip;
  TieBreak tie_break = TieBreak::Lexicographic;
  std::uint64_t tie_seed = 0;
};

enum class MergeOutcome { Accepted, Skipped, Halted };

struct MergeStep {
  EdgeId edge;
  double ci;
  double gain;
  MergeOutcome outcome;
};

struct MergeResult {
  Partition partition;
  std::vector<MergeStep> log;
  double modularity = 0.0;
};

/// Starts from singletons and walks `scores` (sorted by `score_before`). Each
/// edge whose endpoints sit in different communities is logged with its
/// modularity gain; positive gains merge the two communities. Edges already
/// inside one community are passed over silently.
MergeResult greedy_merge(const Graph& g, std::span<const EdgeScore> scores,
                         const MergePolicy& policy = {});

/// Applies the policy's tie-break to a score list already sorted by score.
std::vector<EdgeScore> order_for_merge(std::span<const EdgeScore> scores, const MergePolicy& policy);

}  // namespace ciia
