#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ciia/graph.hpp"
#include "ciia/random.hpp"
#include "ciia/report.hpp"

namespace ciia {

/// Weighted undirected multigraph used between Louvain levels. Arcs are
/// stored in both directions; `self_loop(u)` holds twice the weight of the
/// edges folded into u, so strengths sum to the original 2m.
class WorkingGraph {
 public:
  WorkingGraph() = default;
  explicit WorkingGraph(const Graph& g);

  /// Adjacency lists must be symmetric and loop-free.
  static WorkingGraph from_parts(std::vector<std::vector<std::pair<std::uint32_t, double>>> adjacency,
                                 std::vector<double> self_loops);

  std::size_t node_count() const noexcept { return self_.size(); }
  std::span<const std::uint32_t> neighbors(std::uint32_t u) const noexcept {
    return {targets_.data() + offsets_[u], offsets_[u + 1] - offsets_[u]};
  }
  std::span<const double> weights(std::uint32_t u) const noexcept {
    return {weights_.data() + offsets_[u], offsets_[u + 1] - offsets_[u]};
  }
  double self_loop(std::uint32_t u) const noexcept { return self_[u]; }
  double strength(std::uint32_t u) const noexcept { return strength_[u]; }
  /// Sum of strengths (2m for an unweighted input).
  double total_weight() const noexcept { return total_; }

 private:
  void finish();

  std::vector<std::size_t> offsets_{0};
  std::vector<std::uint32_t> targets_;
  std::vector<double> weights_;
  std::vector<double> self_;
  std::vector<double> strength_;
  double total_ = 0.0;
};

struct LouvainConfig {
  std::uint64_t seed = 0;
  double min_gain = 0.0;               // a move must improve Q by more than this
  std::size_t max_sweeps = 1000;       // per level
  std::size_t max_levels = 64;
};

/// Modularity of `community` (one tag per node, tags < node_count) on `wg`.
double working_modularity(const WorkingGraph& wg, std::span<const std::uint32_t> community);

struct LocalMoveResult {
  bool improved = false;
  std::size_t moves = 0;
  std::size_t sweeps = 0;
};

/// Repeated sweeps in seeded shuffled order. Each node moves to the adjacent
/// community with the largest modularity gain, if that gain beats staying by
/// more than `min_gain`; ties prefer the smaller community id. Stops after a
/// sweep with no moves.
LocalMoveResult local_move_pass(const WorkingGraph& wg, std::vector<std::uint32_t>& community, Rng& rng,
                                const LouvainConfig& config = {});

/// One node per community (tags compacted in order of first appearance).
/// Returns the compacted tags through `compact` when non-null.
WorkingGraph aggregate_graph(const WorkingGraph& wg, std::span<const std::uint32_t> community,
                             std::vector<std::uint32_t>* compact = nullptr);

/// Local moving and aggregation until a level brings no improvement.
AlgoReport louvain(const Graph& g, const LouvainConfig& config = {});

/// Best modularity of `restarts` runs with seeds first_seed, first_seed+1, ...
/// Ties keep the earliest seed.
AlgoReport louvain_best_of(const Graph& g, std::size_t restarts, std::uint64_t first_seed = 0,
                           LouvainConfig config = {});

}  // namespace ciia
