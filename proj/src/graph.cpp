#include "ciia/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace ciia {

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

Graph Graph::from_edges(std::vector<std::string> labels,
                        std::span<const std::pair<NodeId, NodeId>> edges) {
  Graph g;
  const std::size_t n = labels.size();
  g.labels_ = std::move(labels);
  g.index_.reserve(n);
  for (NodeId u = 0; u < n; ++u) {
    if (!g.index_.emplace(g.labels_[u], u).second) {
      throw Error("duplicate node label '" + g.labels_[u] + "'");
    }
  }

  // Deduplicate while keeping first-insertion order.
  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) throw Error("edge endpoint out of range");
    if (a == b) throw Error("self-loop on node '" + g.labels_[a] + "'");
    canon.push_back(Edge{std::min(a, b), std::max(a, b)});
  }
  std::vector<std::uint32_t> order(canon.size());
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t x, std::uint32_t y) { return canon[x] < canon[y]; });
  std::vector<char> keep(canon.size(), 0);
  for (std::size_t t = 0; t < order.size(); ++t) {
    if (t == 0 || canon[order[t]] != canon[order[t - 1]]) keep[order[t]] = 1;
  }
  for (std::size_t t = 0; t < canon.size(); ++t) {
    if (keep[t]) g.edges_.push_back(canon[t]);
  }

  std::vector<std::uint32_t> deg(n, 0);
  for (const Edge& e : g.edges_) {
    ++deg[e.lo];
    ++deg[e.hi];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t u = 0; u < n; ++u) g.offsets_[u + 1] = g.offsets_[u] + deg[u];

  const std::size_t arcs = 2 * g.edges_.size();
  g.targets_.resize(arcs);
  g.arc_edge_.resize(arcs);
  g.reverse_.resize(arcs);
  std::vector<ArcId> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (EdgeId e = 0; e < g.edges_.size(); ++e) {
    const Edge ed = g.edges_[e];
    g.targets_[cursor[ed.lo]] = ed.hi;
    g.arc_edge_[cursor[ed.lo]++] = e;
    g.targets_[cursor[ed.hi]] = ed.lo;
    g.arc_edge_[cursor[ed.hi]++] = e;
  }
  // Sort each neighbor list, carrying the edge ids along.
  std::vector<std::pair<NodeId, EdgeId>> scratch;
  for (std::size_t u = 0; u < n; ++u) {
    const ArcId b = g.offsets_[u], e = g.offsets_[u + 1];
    scratch.clear();
    for (ArcId a = b; a < e; ++a) scratch.emplace_back(g.targets_[a], g.arc_edge_[a]);
    std::sort(scratch.begin(), scratch.end());
    for (ArcId a = b; a < e; ++a) {
      g.targets_[a] = scratch[a - b].first;
      g.arc_edge_[a] = scratch[a - b].second;
    }
  }
  for (NodeId u = 0; u < n; ++u) {
    for (ArcId a = g.offsets_[u]; a < g.offsets_[u + 1]; ++a) {
      g.reverse_[a] = g.find_arc(g.targets_[a], u);
    }
  }
  g.degree_real_.resize(n);
  for (NodeId u = 0; u < n; ++u) g.degree_real_[u] = static_cast<double>(g.degree(u));
  return g;
}

ArcId Graph::find_arc(NodeId u, NodeId v) const noexcept {
  if (u >= node_count() || v >= node_count()) return npos;
  const auto first = targets_.begin() + offsets_[u];
  const auto last = targets_.begin() + offsets_[u + 1];
  const auto it = std::lower_bound(first, last, v);
  if (it == last || *it != v) return npos;
  return static_cast<ArcId>(it - targets_.begin());
}

EdgeId Graph::edge_id(NodeId u, NodeId v) const {
  const ArcId a = find_arc(u, v);
  if (a == npos) {
    throw Error("no edge between nodes " + std::to_string(u) + " and " + std::to_string(v));
  }
  return arc_edge_[a];
}

NodeId Graph::id_of(std::string_view label) const {
  const auto it = index_.find(std::string(label));
  if (it == index_.end()) throw Error("unknown node label '" + std::string(label) + "'");
  return it->second;
}

bool Graph::contains_label(std::string_view label) const {
  return index_.contains(std::string(label));
}

NodeId GraphBuilder::add_node(std::string_view label) {
  auto [it, inserted] = index_.emplace(std::string(label), static_cast<NodeId>(labels_.size()));
  if (inserted) labels_.emplace_back(label);
  return it->second;
}

void GraphBuilder::add_edge(std::string_view a, std::string_view b) {
  if (a == b) throw Error("self-loop on node '" + std::string(a) + "'");
  const NodeId ia = add_node(a);
  const NodeId ib = add_node(b);
  edges_.emplace_back(ia, ib);
}

void GraphBuilder::add_edge(NodeId a, NodeId b) {
  if (a >= labels_.size() || b >= labels_.size()) throw Error("edge endpoint out of range");
  if (a == b) throw Error("self-loop on node '" + labels_[a] + "'");
  edges_.emplace_back(a, b);
}

Graph GraphBuilder::build() const { return Graph::from_edges(labels_, edges_); }

Graph parse_edgelist(std::istream& in) {
  GraphBuilder builder;
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::string> tokens;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    tokens.clear();
    for (std::string tok; fields >> tok;) tokens.push_back(std::move(tok));
    if (tokens.empty()) continue;
    if (tokens.size() != 2) {
      throw ParseError(lineno, "expected 2 node labels, found " + std::to_string(tokens.size()));
    }
    if (tokens[0] == tokens[1]) throw ParseError(lineno, "self-loop on node '" + tokens[0] + "'");
    builder.add_edge(tokens[0], tokens[1]);
  }
  if (in.bad()) throw Error("read error after line " + std::to_string(lineno));
  return builder.build();
}

Graph parse_edgelist_string(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edgelist(in);
}

Graph read_edgelist_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse_edgelist(in);
}

void write_edgelist(std::ostream& out, const Graph& g) {
  for (const auto& label : g.labels()) {
    if (label.empty() || label.find_first_of(" \t\r\n#") != std::string::npos) {
      throw Error("label '" + label + "' cannot be written to an edge list");
    }
  }
  for (const Edge& e : g.edges()) out << g.label(e.lo) << ' ' << g.label(e.hi) << '\n';
}

Graph graph_from_pairs(std::size_t n, std::span<const std::pair<NodeId, NodeId>> edges) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t u = 0; u < n; ++u) labels.push_back(std::to_string(u));
  return Graph::from_edges(std::move(labels), edges);
}

}  // namespace ciia
