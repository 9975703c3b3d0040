#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ciia/graph.hpp"

namespace ciia {

using CommunityId = std::uint32_t;

/// Node-to-community assignment over a fixed graph, with per-community
/// aggregates (internal edge count, degree total, member list).
///
/// Community ids live in [0, node_count); an id is "alive" while it has at
/// least one member. All-singletons uses community id == node id.
class Partition {
 public:
  Partition() = default;

  static Partition singletons(const Graph& g);
  /// `assignment[u]` is any community tag; tags are compacted to 0..K-1 in
  /// order of first appearance.
  static Partition from_assignment(const Graph& g, std::span<const std::uint32_t> assignment);

  std::size_t node_count() const noexcept { return assignment_.size(); }
  std::size_t community_count() const noexcept { return alive_count_; }

  CommunityId community_of(NodeId u) const noexcept { return assignment_[u]; }
  std::span<const CommunityId> assignment() const noexcept { return assignment_; }
  bool alive(CommunityId c) const noexcept { return c < members_.size() && !members_[c].empty(); }

  std::span<const NodeId> members(CommunityId c) const noexcept { return members_[c]; }
  std::uint64_t internal_edges(CommunityId c) const noexcept { return internal_[c]; }
  std::uint64_t degree_total(CommunityId c) const noexcept { return degree_[c]; }

  /// Alive community ids in ascending order.
  std::vector<CommunityId> community_ids() const;

  /// Groups of node ids, one per alive community, each sorted, ordered by
  /// smallest member.
  std::vector<std::vector<NodeId>> groups() const;

 private:
  friend void apply_merge(const Graph&, Partition&, CommunityId, CommunityId);

  std::vector<CommunityId> assignment_;
  std::vector<std::vector<NodeId>> members_;
  std::vector<std::uint64_t> internal_;
  std::vector<std::uint64_t> degree_;
  std::size_t alive_count_ = 0;
};

/// Newman modularity Q = sum_c [e_c/m - (d_c/2m)^2], recomputed from scratch.
/// Throws `Error` when the graph has no edges.
double modularity(const Graph& g, const Partition& p);

/// Edges with one endpoint in `a` and the other in `b`.
std::uint64_t edges_between(const Graph& g, const Partition& p, CommunityId a, CommunityId b);

/// Change in Q from merging communities `a` and `b`:
/// e_ab/m - d_a*d_b/(2m^2). Throws on a == b or a dead id.
double merge_gain(const Graph& g, const Partition& p, CommunityId a, CommunityId b);

/// Moves every member of `b` into `a`, updating aggregates incrementally.
void apply_merge(const Graph& g, Partition& p, CommunityId a, CommunityId b);

/// Number of edges whose endpoints share a community.
std::size_t intra_edge_count(const Graph& g, const Partition& p);

}  // namespace ciia
