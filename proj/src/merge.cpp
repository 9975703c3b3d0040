#include "ciia/merge.hpp"

#include <algorithm>
#include <limits>

#include "ciia/random.hpp"

namespace ciia {

std::vector<EdgeScore> order_for_merge(std::span<const EdgeScore> scores, const MergePolicy& policy) {
  std::vector<EdgeScore> ordered(scores.begin(), scores.end());
  sort_scores(ordered);
  if (policy.tie_break == TieBreak::SeededRandom) {
    Rng rng(policy.tie_seed);
    for (std::size_t begin = 0; begin < ordered.size();) {
      std::size_t end = begin + 1;
      while (end < ordered.size() && ordered[end].ci == ordered[begin].ci) ++end;
      if (end - begin > 1) rng.shuffle(std::span(ordered).subspan(begin, end - begin));
      begin = end;
    }
  }
  return ordered;
}

MergeResult greedy_merge(const Graph& g, std::span<const EdgeScore> scores, const MergePolicy& policy) {
  MergeResult result;
  result.partition = Partition::singletons(g);
  Partition& p = result.partition;

  for (const EdgeScore& s : order_for_merge(scores, policy)) {
    CommunityId a = p.community_of(s.key.lo);
    CommunityId b = p.community_of(s.key.hi);
    if (a == b) continue;
    const double gain = merge_gain(g, p, a, b);
    MergeOutcome outcome = MergeOutcome::Accepted;
    if (gain < 0.0) {
      outcome = policy.stop == StopRule::HaltOnNegative ? MergeOutcome::Halted : MergeOutcome::Skipped;
    } else if (gain == 0.0) {
      switch (policy.zero_gain) {
        case ZeroGainRule::Skip:
          outcome = MergeOutcome::Skipped;
          break;
        case ZeroGainRule::Accept:
          outcome = MergeOutcome::Accepted;
          break;
        case ZeroGainRule::Halt:
          outcome = MergeOutcome::Halted;
          break;
      }
    }
    result.log.push_back(MergeStep{s.edge, s.ci, gain, outcome});
    if (outcome == MergeOutcome::Halted) break;
    if (outcome == MergeOutcome::Accepted) {
      // Keep the id of the heavier side so member lists grow by the smaller one.
      if (p.degree_total(b) > p.degree_total(a) || (p.degree_total(b) == p.degree_total(a) && b < a)) {
        std::swap(a, b);
      }
      apply_merge(g, p, a, b);
    }
  }
  result.modularity =
      g.edge_count() > 0 ? modularity(g, p) : std::numeric_limits<double>::quiet_NaN();
  return result;
}

}  // namespace ciia
