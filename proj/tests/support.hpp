#pragma once

// Test-only helpers: small graph builders and brute-force oracles that share
// no code with the library beyond the Graph accessors.

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ciia/graph.hpp"
#include "ciia/partition.hpp"

namespace test {

using ciia::Graph;
using ciia::NodeId;

inline Graph from_pairs(std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& edges) {
  return ciia::graph_from_pairs(n, edges);
}

inline Graph triangle() { return from_pairs(3, {{0, 1}, {1, 2}, {0, 2}}); }

inline Graph two_triangles() { return from_pairs(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}); }

inline Graph cycle(std::size_t n) {
  std::vector<std::pair<NodeId, NodeId>> e;
  for (NodeId u = 0; u < n; ++u) e.emplace_back(u, static_cast<NodeId>((u + 1) % n));
  return from_pairs(n, e);
}

inline Graph complete(std::size_t n) {
  std::vector<std::pair<NodeId, NodeId>> e;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return from_pairs(n, e);
}

/// G(n, p) with at least one edge; std::mt19937 so it is independent of the
/// library generator.
inline Graph random_graph(std::mt19937& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<NodeId, NodeId>> e;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  if (e.empty()) e.emplace_back(0, 1);
  return from_pairs(n, e);
}

inline bool connected(const Graph& g) {
  if (g.node_count() == 0) return true;
  std::vector<char> seen(g.node_count(), 0);
  std::vector<NodeId> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    for (NodeId v : g.neighbors(u)) {
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count == g.node_count();
}

struct Matrix {
  std::size_t n;
  std::vector<int> a;
  std::vector<double> k;
  double two_m = 0;
  int at(std::size_t u, std::size_t v) const { return a[u * n + v]; }
};

inline Matrix dense(const Graph& g) {
  Matrix m{g.node_count(), std::vector<int>(g.node_count() * g.node_count(), 0),
           std::vector<double>(g.node_count(), 0.0)};
  for (const auto& e : g.edges()) {
    m.a[e.lo * m.n + e.hi] = 1;
    m.a[e.hi * m.n + e.lo] = 1;
  }
  for (std::size_t u = 0; u < m.n; ++u) {
    for (std::size_t v = 0; v < m.n; ++v) m.k[u] += m.at(u, v);
    m.two_m += m.k[u];
  }
  return m;
}

/// (neighbors of i, plus i) minus j, from the adjacency matrix.
inline std::set<std::size_t> circle_set(const Matrix& m, std::size_t i, std::size_t j) {
  std::set<std::size_t> s{i};
  for (std::size_t v = 0; v < m.n; ++v)
    if (m.at(i, v)) s.insert(v);
  s.erase(j);
  return s;
}

struct Parts {
  double actual, actual_overlap, expected, expected_overlap;
  double score() const { return (actual - actual_overlap) - (expected - expected_overlap); }
};

/// Unweighted components by literal double loops over explicit sets.
inline Parts naive_parts(const Graph& g, NodeId i, NodeId j) {
  const Matrix m = dense(g);
  const auto si = circle_set(m, i, j);
  const auto sj = circle_set(m, j, i);
  std::set<std::size_t> both;
  for (auto u : si)
    if (sj.count(u)) both.insert(u);
  Parts p{0, 0, 0, 0};
  for (auto u : si)
    for (auto v : sj) p.actual += m.at(u, v);
  for (auto u : both)
    for (auto v : both)
      if (u != v) p.actual_overlap += 0.5 * m.at(u, v);
  double ki = 0, kj = 0;
  for (auto u : si) ki += m.k[u];
  for (auto v : sj) kj += m.k[v];
  p.expected = ki * kj / m.two_m;
  double rp = 0;
  for (auto u : both) rp += m.k[u] * m.k[u];
  for (auto u : both)
    for (auto v : both)
      if (u != v) rp += 0.5 * m.k[u] * m.k[v];
  p.expected_overlap = rp / m.two_m;
  return p;
}

/// The uncorrected form: crossing edges minus the product of circle degree
/// sums, with no overlap terms.
inline double naive_uncorrected(const Graph& g, NodeId i, NodeId j) {
  const Matrix m = dense(g);
  const auto si = circle_set(m, i, j);
  const auto sj = circle_set(m, j, i);
  double cross = 0, ki = 0, kj = 0;
  for (auto u : si)
    for (auto v : sj) cross += m.at(u, v);
  for (auto u : si) ki += m.k[u];
  for (auto v : sj) kj += m.k[v];
  return cross - ki * kj / m.two_m;
}

/// Number of distinct unordered edges {u,v} with one end in each circle.
inline double crossing_edge_count(const Graph& g, NodeId i, NodeId j) {
  const Matrix m = dense(g);
  const auto si = circle_set(m, i, j);
  const auto sj = circle_set(m, j, i);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto u : si)
    for (auto v : sj)
      if (m.at(u, v)) seen.emplace(std::min(u, v), std::max(u, v));
  return static_cast<double>(seen.size());
}

/// Weighted components, with w(u, anchor) the weight u gives to anchor and
/// w(u, u) == 1. Circle members with zero weight toward their anchor are
/// dropped first. Squared-degree terms use w_ui * w_uj.
inline Parts naive_weighted_parts(const Graph& g, NodeId i, NodeId j,
                                  const std::function<double(std::size_t, std::size_t)>& w) {
  const Matrix m = dense(g);
  std::set<std::size_t> si, sj, both;
  for (auto u : circle_set(m, i, j))
    if (w(u, i) > 0) si.insert(u);
  for (auto v : circle_set(m, j, i))
    if (w(v, j) > 0) sj.insert(v);
  for (auto u : si)
    if (sj.count(u)) both.insert(u);
  Parts p{0, 0, 0, 0};
  for (auto u : si)
    for (auto v : sj) p.actual += w(u, i) * w(v, j) * m.at(u, v);
  for (auto u : both)
    for (auto v : both)
      if (u != v) p.actual_overlap += 0.5 * (w(u, i) * w(v, j) + w(v, i) * w(u, j)) / 2 * m.at(u, v);
  double ki = 0, kj = 0;
  for (auto u : si) ki += w(u, i) * m.k[u];
  for (auto v : sj) kj += w(v, j) * m.k[v];
  p.expected = ki * kj / m.two_m;
  double rp = 0;
  for (auto u : both) rp += w(u, i) * w(u, j) * m.k[u] * m.k[u];
  for (auto u : both)
    for (auto v : both)
      if (u != v) rp += 0.5 * (w(u, i) * w(v, j) + w(v, i) * w(u, j)) / 2 * m.k[u] * m.k[v];
  p.expected_overlap = rp / m.two_m;
  return p;
}

/// Q = (1/2m) sum_uv [A_uv - k_u k_v / 2m] delta(c_u, c_v).
inline double naive_modularity(const Graph& g, const std::vector<std::uint32_t>& community) {
  const Matrix m = dense(g);
  double q = 0;
  for (std::size_t u = 0; u < m.n; ++u)
    for (std::size_t v = 0; v < m.n; ++v)
      if (community[u] == community[v]) q += m.at(u, v) - m.k[u] * m.k[v] / m.two_m;
  return q / m.two_m;
}

inline std::vector<std::uint32_t> assignment_of(const ciia::Partition& p) {
  return {p.assignment().begin(), p.assignment().end()};
}

}  // namespace test
