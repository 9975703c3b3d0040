#include "ciia/partition.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace ciia {

namespace {

void check_alive(const Partition& p, CommunityId c) {
  if (!p.alive(c)) throw Error("unknown community id " + std::to_string(c));
}

}  // namespace

Partition Partition::singletons(const Graph& g) {
  const std::size_t n = g.node_count();
  Partition p;
  p.assignment_.resize(n);
  p.members_.resize(n);
  p.internal_.assign(n, 0);
  p.degree_.resize(n);
  for (NodeId u = 0; u < n; ++u) {
    p.assignment_[u] = u;
    p.members_[u] = {u};
    p.degree_[u] = g.degree(u);
  }
  p.alive_count_ = n;
  return p;
}

Partition Partition::from_assignment(const Graph& g, std::span<const std::uint32_t> assignment) {
  const std::size_t n = g.node_count();
  if (assignment.size() != n) throw Error("assignment size does not match node count");
  Partition p;
  p.assignment_.resize(n);
  p.members_.resize(n);
  p.internal_.assign(n, 0);
  p.degree_.assign(n, 0);
  std::unordered_map<std::uint32_t, CommunityId> compact;
  for (NodeId u = 0; u < n; ++u) {
    auto [it, inserted] = compact.emplace(assignment[u], static_cast<CommunityId>(compact.size()));
    const CommunityId c = it->second;
    p.assignment_[u] = c;
    p.members_[c].push_back(u);
    p.degree_[c] += g.degree(u);
  }
  for (const Edge& e : g.edges()) {
    if (p.assignment_[e.lo] == p.assignment_[e.hi]) ++p.internal_[p.assignment_[e.lo]];
  }
  p.alive_count_ = compact.size();
  return p;
}

std::vector<CommunityId> Partition::community_ids() const {
  std::vector<CommunityId> ids;
  ids.reserve(alive_count_);
  for (CommunityId c = 0; c < members_.size(); ++c) {
    if (!members_[c].empty()) ids.push_back(c);
  }
  return ids;
}

std::vector<std::vector<NodeId>> Partition::groups() const {
  std::vector<std::vector<NodeId>> out;
  out.reserve(alive_count_);
  for (const auto& m : members_) {
    if (m.empty()) continue;
    out.push_back(m);
    std::sort(out.back().begin(), out.back().end());
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

double modularity(const Graph& g, const Partition& p) {
  const std::size_t m = g.edge_count();
  if (m == 0) throw Error("modularity is undefined for a graph without edges");
  if (p.node_count() != g.node_count()) throw Error("partition does not match graph");
  std::vector<std::uint64_t> internal(g.node_count(), 0), degree(g.node_count(), 0);
  for (const Edge& e : g.edges()) {
    if (p.community_of(e.lo) == p.community_of(e.hi)) ++internal[p.community_of(e.lo)];
  }
  for (NodeId u = 0; u < g.node_count(); ++u) degree[p.community_of(u)] += g.degree(u);
  const double md = static_cast<double>(m);
  const double two_m = 2.0 * md;
  double q = 0.0;
  for (std::size_t c = 0; c < internal.size(); ++c) {
    if (degree[c] == 0 && internal[c] == 0) continue;
    const double share = static_cast<double>(degree[c]) / two_m;
    q += static_cast<double>(internal[c]) / md - share * share;
  }
  return q;
}

std::uint64_t edges_between(const Graph& g, const Partition& p, CommunityId a, CommunityId b) {
  check_alive(p, a);
  check_alive(p, b);
  if (a == b) return 0;
  // Scan whichever side has fewer incident arcs.
  if (p.degree_total(b) < p.degree_total(a)) std::swap(a, b);
  std::uint64_t count = 0;
  for (NodeId u : p.members(a)) {
    for (NodeId v : g.neighbors(u)) count += p.community_of(v) == b;
  }
  return count;
}

double merge_gain(const Graph& g, const Partition& p, CommunityId a, CommunityId b) {
  if (a == b) throw Error("cannot merge a community with itself");
  check_alive(p, a);
  check_alive(p, b);
  const double m = static_cast<double>(g.edge_count());
  if (m == 0) throw Error("modularity is undefined for a graph without edges");
  const double e_ab = static_cast<double>(edges_between(g, p, a, b));
  const double da = static_cast<double>(p.degree_total(a));
  const double db = static_cast<double>(p.degree_total(b));
  return e_ab / m - da * db / (2.0 * m * m);
}

void apply_merge(const Graph& g, Partition& p, CommunityId a, CommunityId b) {
  if (a == b) throw Error("cannot merge a community with itself");
  check_alive(p, a);
  check_alive(p, b);
  const std::uint64_t cross = edges_between(g, p, a, b);
  for (NodeId u : p.members_[b]) p.assignment_[u] = a;
  auto& dst = p.members_[a];
  dst.insert(dst.end(), p.members_[b].begin(), p.members_[b].end());
  p.members_[b].clear();
  p.members_[b].shrink_to_fit();
  p.internal_[a] += p.internal_[b] + cross;
  p.degree_[a] += p.degree_[b];
  p.internal_[b] = 0;
  p.degree_[b] = 0;
  --p.alive_count_;
}

std::size_t intra_edge_count(const Graph& g, const Partition& p) {
  std::size_t count = 0;
  for (const Edge& e : g.edges()) count += p.community_of(e.lo) == p.community_of(e.hi);
  return count;
}

}  // namespace ciia
