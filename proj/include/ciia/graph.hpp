#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ciia {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;
using ArcId = std::uint32_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Undirected edge stored with `lo < hi` (internal ids).
struct Edge {
  NodeId lo;
  NodeId hi;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph in CSR form.
///
/// Neighbor lists are sorted by internal id. Every undirected edge appears as
/// two arcs; `arc_reverse(a)` maps an arc u->v to v->u and `arc_edge(a)`
/// yields the undirected edge id. Edges are numbered in first-insertion
/// order, so writing them back in id order preserves label order.
class Graph {
 public:
  Graph() = default;

  /// Builds from labels and an edge list over indices into `labels`.
  /// Duplicate edges collapse; a self-loop throws `Error`.
  static Graph from_edges(std::vector<std::string> labels,
                          std::span<const std::pair<NodeId, NodeId>> edges);

  std::size_t node_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::uint32_t degree(NodeId u) const noexcept { return offsets_[u + 1] - offsets_[u]; }
  std::span<const NodeId> neighbors(NodeId u) const noexcept {
    return {targets_.data() + offsets_[u], degree(u)};
  }
  ArcId arc_begin(NodeId u) const noexcept { return offsets_[u]; }
  ArcId arc_end(NodeId u) const noexcept { return offsets_[u + 1]; }
  NodeId arc_target(ArcId a) const noexcept { return targets_[a]; }
  ArcId arc_reverse(ArcId a) const noexcept { return reverse_[a]; }
  EdgeId arc_edge(ArcId a) const noexcept { return arc_edge_[a]; }

  /// Arc u->v, or `npos` when the nodes are not adjacent.
  ArcId find_arc(NodeId u, NodeId v) const noexcept;
  bool has_edge(NodeId u, NodeId v) const noexcept { return find_arc(u, v) != npos; }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const noexcept { return edges_[e]; }
  /// Edge id for an adjacent pair in either orientation; throws if absent.
  EdgeId edge_id(NodeId u, NodeId v) const;

  std::span<const NodeId> targets() const noexcept { return targets_; }
  std::span<const double> degrees_real() const noexcept { return degree_real_; }

  const std::string& label(NodeId u) const noexcept { return labels_[u]; }
  std::span<const std::string> labels() const noexcept { return labels_; }
  /// Internal id for a label; throws `Error` when unknown.
  NodeId id_of(std::string_view label) const;
  bool contains_label(std::string_view label) const;

  static constexpr ArcId npos = static_cast<ArcId>(-1);

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<ArcId> offsets_{0};
  std::vector<NodeId> targets_;
  std::vector<ArcId> reverse_;
  std::vector<EdgeId> arc_edge_;
  std::vector<Edge> edges_;
  std::vector<double> degree_real_;
};

/// Accumulates labelled edges, assigning dense ids in first-appearance order.
class GraphBuilder {
 public:
  NodeId add_node(std::string_view label);
  /// Throws `Error` on a self-loop.
  void add_edge(std::string_view a, std::string_view b);
  void add_edge(NodeId a, NodeId b);
  Graph build() const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<std::pair<NodeId, NodeId>> edges_;
};

/// One edge per non-comment line: two whitespace separated labels. `#` starts
/// a comment, blank lines are skipped, duplicates collapse.
Graph parse_edgelist(std::istream& in);
Graph parse_edgelist_string(std::string_view text);
Graph read_edgelist_file(const std::string& path);

/// Writes edges in id order as "label label" lines. Labels containing
/// whitespace or '#' cannot be represented and throw. Isolated nodes are not
/// written.
void write_edgelist(std::ostream& out, const Graph& g);

/// Convenience for tests and generators: nodes labelled "0".."n-1".
Graph graph_from_pairs(std::size_t n, std::span<const std::pair<NodeId, NodeId>> edges);

}  // namespace ciia
