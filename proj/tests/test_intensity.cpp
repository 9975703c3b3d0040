#include <doctest.h>

#include <cmath>

#include "ciia/fixtures.hpp"
#include "ciia/intensity.hpp"
#include "support.hpp"

using namespace ciia;

namespace {

std::vector<std::string> member_labels(const Graph& g, const Circle& c) {
  std::vector<std::string> out;
  for (NodeId u : c.members) out.push_back(g.label(u));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return std::stoi(a) < std::stoi(b); });
  return out;
}

void check_against_oracle(const Graph& g) {
  for (const auto& e : g.edges()) {
    for (auto [i, j] : {std::pair{e.lo, e.hi}, std::pair{e.hi, e.lo}}) {
      const IntensityParts got = ci_components(g, i, j);
      const test::Parts want = test::naive_parts(g, i, j);
      CHECK(std::abs(got.actual - want.actual) < 1e-12);
      CHECK(std::abs(got.actual_overlap - want.actual_overlap) < 1e-12);
      CHECK(std::abs(got.expected - want.expected) < 1e-12);
      CHECK(std::abs(got.expected_overlap - want.expected_overlap) < 1e-12);
      CHECK(std::abs(ci_edge(g, i, j).ci - want.score()) < 1e-12);
    }
  }
}

}  // namespace

TEST_CASE("circles on the numbered florentine graph") {
  const Graph g = fixtures::florentine_numbered();
  const NodeId two = g.id_of("2"), four = g.id_of("4");
  CHECK(member_labels(g, circle(g, two, four)) == std::vector<std::string>{"1", "2", "3", "5", "9", "12"});
  CHECK(member_labels(g, circle(g, four, two)) == std::vector<std::string>{"3", "4", "10"});
  CHECK_THROWS_AS(circle(g, two, g.id_of("7")), Error);
}

TEST_CASE("circle of a lone edge holds only its anchor") {
  const Graph g = parse_edgelist_string("a b\n");
  const Circle c = circle(g, 0, 1);
  CHECK(c.members == std::vector<NodeId>{0});
  CHECK(c.anchor == 0);
  CHECK(c.excluded == 1);
}

TEST_CASE("circle size equals the anchor degree") {
  std::mt19937 rng(2);
  const Graph g = test::random_graph(rng, 25, 0.2);
  for (const auto& e : g.edges()) {
    CHECK(circle(g, e.lo, e.hi).members.size() == g.degree(e.lo));
    CHECK(circle(g, e.hi, e.lo).members.size() == g.degree(e.hi));
  }
}

TEST_CASE("florentine (2,4) decomposition") {
  const Graph g = fixtures::florentine_numbered();
  const IntensityParts p = ci_components(g, g.id_of("2"), g.id_of("4"));
  CHECK(std::abs(p.actual - 4.0) < 1e-12);
  CHECK(std::abs(p.actual_overlap - 0.0) < 1e-12);
  CHECK(std::abs(p.expected - 4.25) < 1e-12);
  CHECK(std::abs(p.expected_overlap - 0.225) < 1e-12);
  CHECK(std::abs(ci_edge(g, g.id_of("2"), g.id_of("4")).ci - -0.025) < 1e-12);
}

TEST_CASE("triangle decomposition") {
  const Graph g = test::triangle();
  for (const auto& e : g.edges()) {
    const IntensityParts p = ci_components(g, e.lo, e.hi);
    CHECK(std::abs(p.actual - 3.0) < 1e-12);
    CHECK(std::abs(p.actual_overlap) < 1e-12);
    CHECK(std::abs(p.expected - 16.0 / 6.0) < 1e-12);
    CHECK(std::abs(p.expected_overlap - 4.0 / 6.0) < 1e-12);
    CHECK(std::abs(ci_edge(g, e.lo, e.hi).ci - 1.0) < 1e-12);
  }
}

TEST_CASE("ten-node (7,8) matches the oracle and the reference score") {
  const Graph g = fixtures::ten_node();
  const NodeId a = g.id_of("7"), b = g.id_of("8");
  const test::Parts want = test::naive_parts(g, a, b);
  CHECK(std::abs(want.score() - -1.21875) < 1e-12);
  CHECK(std::abs(ci_edge(g, a, b).ci - -1.21875) < 1e-12);
  CHECK(std::abs(ci_edge(g, g.id_of("5"), g.id_of("6")).ci - 1.625) < 1e-12);
}

TEST_CASE("florentine scores in reference order") {
  const Graph g = fixtures::florentine_numbered();
  const auto scores = ci_all(g);
  const auto reference = fixtures::florentine_numbered_scores();
  REQUIRE(scores.size() == reference.size());
  CHECK(scores.front().ci == doctest::Approx(2.75));
  CHECK(scores.back().ci == doctest::Approx(-2.9));
  for (std::size_t t = 0; t < reference.size(); ++t) {
    const EdgeId e = g.edge_id(g.id_of(reference[t].a), g.id_of(reference[t].b));
    CHECK(scores[t].edge == e);
    CHECK(std::abs(scores[t].ci - reference[t].ci) < 1e-9);
  }
}

TEST_CASE("star ties fall back to ascending edge key") {
  const Graph g = parse_edgelist_string("hub c\nhub a\nhub b\n");
  const auto scores = ci_all(g);
  REQUIRE(scores.size() == 3);
  CHECK(scores[0].ci == scores[1].ci);
  CHECK(scores[1].ci == scores[2].ci);
  for (std::size_t t = 1; t < scores.size(); ++t) CHECK(scores[t - 1].key < scores[t].key);
}

TEST_CASE("oracle equivalence on every connected graph up to five nodes") {
  std::size_t graphs = 0;
  for (std::size_t n = 2; n <= 5; ++n) {
    std::vector<std::pair<NodeId, NodeId>> pairs;
    for (NodeId u = 0; u < n; ++u)
      for (NodeId v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    for (std::uint32_t mask = 1; mask < (1u << pairs.size()); ++mask) {
      std::vector<std::pair<NodeId, NodeId>> e;
      for (std::size_t b = 0; b < pairs.size(); ++b)
        if (mask >> b & 1u) e.push_back(pairs[b]);
      const Graph g = test::from_pairs(n, e);
      if (!test::connected(g)) continue;
      ++graphs;
      check_against_oracle(g);
    }
  }
  CHECK(graphs == 1 + 4 + 38 + 728);
}

TEST_CASE("oracle equivalence on sampled connected graphs of six to eight nodes") {
  std::mt19937 rng(8);
  std::size_t graphs = 0;
  while (graphs < 300) {
    const std::size_t n = 6 + graphs % 3;
    const Graph g = test::random_graph(rng, n, 0.25 + 0.5 * (graphs % 5) / 4.0);
    if (!test::connected(g)) continue;
    ++graphs;
    check_against_oracle(g);
  }
}

TEST_CASE("component invariants, symmetry and the set-count identity") {
  std::mt19937 rng(21);
  for (int t = 0; t < 100; ++t) {
    const Graph g = test::random_graph(rng, 4 + t % 12, 0.35);
    for (const auto& e : g.edges()) {
      const IntensityParts p = ci_components(g, e.lo, e.hi);
      CHECK(p.actual_overlap >= 0);
      CHECK(p.actual_overlap <= p.actual);
      CHECK(p.expected_overlap <= p.expected);
      CHECK(std::abs(p.actual - p.actual_overlap - test::crossing_edge_count(g, e.lo, e.hi)) < 1e-12);
      CHECK(std::abs(ci_edge(g, e.lo, e.hi).ci - ci_edge(g, e.hi, e.lo).ci) < 1e-12);
      CHECK(std::abs(ci_edge(g, e.lo, e.hi).ci - p.score()) < 1e-12);
      // The uncorrected score differs from the corrected one by exactly the
      // two overlap terms.
      CHECK(std::abs(test::naive_uncorrected(g, e.lo, e.hi) - (p.actual - p.expected)) < 1e-12);
    }
  }
}

TEST_CASE("scores_by_edge needs every edge") {
  const Graph g = test::triangle();
  auto scores = ci_all(g);
  CHECK(scores_by_edge(g, scores).size() == 3);
  scores.pop_back();
  CHECK_THROWS_AS(scores_by_edge(g, scores), Error);
}
