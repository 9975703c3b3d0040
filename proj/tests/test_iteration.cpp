#include <doctest.h>

#include <cmath>

#include "ciia/fixtures.hpp"
#include "ciia/intensity.hpp"
#include "ciia/iteration.hpp"
#include "support.hpp"

using namespace ciia;

namespace {

std::vector<EdgeScore> scores_from(const Graph& g, const std::vector<double>& by_edge) {
  std::vector<EdgeScore> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    EdgeScore s;
    s.edge = e;
    s.key = g.edge(e);
    s.ci = by_edge[e];
    out.push_back(s);
  }
  sort_scores(out);
  return out;
}

}  // namespace

TEST_CASE("weights clip negatives then normalize") {
  const Graph g = test::from_pairs(4, {{0, 1}, {0, 2}, {0, 3}});
  const WeightMap w = weights_from_scores(g, scores_from(g, {2.0, 2.0, -1.0}));
  CHECK(w.weight(g, 0, 1) == doctest::Approx(0.5));
  CHECK(w.weight(g, 0, 2) == doctest::Approx(0.5));
  CHECK(w.weight(g, 0, 3) == 0.0);
  CHECK(w.weight(g, 1, 0) == doctest::Approx(1.0));
  CHECK(w.weight(g, 3, 0) == 0.0);
  CHECK(w.weight(g, 2, 2) == 1.0);
  CHECK_THROWS_AS(w.weight(g, 1, 2), Error);
}

TEST_CASE("all-negative node gets zero weights") {
  const Graph g = test::from_pairs(3, {{0, 1}, {0, 2}});
  const WeightMap w = weights_from_scores(g, scores_from(g, {-1.0, -0.5}));
  CHECK(w.weight(g, 0, 1) == 0.0);
  CHECK(w.weight(g, 0, 2) == 0.0);
}

TEST_CASE("weights sum to one or zero per node and may be asymmetric") {
  std::mt19937 rng(4);
  bool asymmetric = false;
  for (int t = 0; t < 50; ++t) {
    const Graph g = test::random_graph(rng, 20, 0.2);
    const WeightMap w = weights_from_scores(g, ci_all(g));
    for (NodeId u = 0; u < g.node_count(); ++u) {
      double total = 0;
      for (NodeId v : g.neighbors(u)) {
        const double x = w.weight(g, u, v);
        CHECK(x >= 0.0);
        CHECK(x <= 1.0);
        total += x;
        if (std::abs(x - w.weight(g, v, u)) > 1e-9) asymmetric = true;
      }
      if (g.degree(u) > 0) CHECK((std::abs(total - 1.0) < 1e-12 || total == 0.0));
    }
  }
  CHECK(asymmetric);
}

TEST_CASE("unit weights reduce to the unweighted score on 200 random graphs") {
  std::mt19937 rng(200);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + t % 29;
    const Graph g = test::random_graph(rng, n, 0.05 + 0.4 * (t % 7) / 6.0);
    const WeightMap ones = WeightMap::uniform(g, 1.0);
    const auto plain = scores_by_edge(g, ci_all(g));
    const auto weighted = weighted_ci_all(g, ones);
    const auto by_edge = scores_by_edge(g, weighted);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      CHECK(std::abs(plain[e] - by_edge[e]) < 1e-12);
    }
    for (const auto& s : weighted) {
      const IntensityParts p = ci_components(g, s.key.lo, s.key.hi);
      CHECK(std::abs(s.parts.actual - p.actual) < 1e-12);
      CHECK(std::abs(s.parts.actual_overlap - p.actual_overlap) < 1e-12);
      CHECK(std::abs(s.parts.expected - p.expected) < 1e-12);
      CHECK(std::abs(s.parts.expected_overlap - p.expected_overlap) < 1e-12);
    }
  }
}

TEST_CASE("weighted score matches the literal oracle and is symmetric") {
  std::mt19937 rng(31);
  for (int t = 0; t < 120; ++t) {
    const Graph g = test::random_graph(rng, 4 + t % 10, 0.45);
    const WeightMap w = weights_from_scores(g, ci_all(g));
    const auto wf = [&](std::size_t u, std::size_t v) {
      return w.weight(g, static_cast<NodeId>(u), static_cast<NodeId>(v));
    };
    for (const auto& e : g.edges()) {
      const EdgeScore s = weighted_ci_edge(g, w, e.lo, e.hi);
      const test::Parts want = test::naive_weighted_parts(g, e.lo, e.hi, wf);
      CHECK(std::abs(s.parts.actual - want.actual) < 1e-12);
      CHECK(std::abs(s.parts.actual_overlap - want.actual_overlap) < 1e-12);
      CHECK(std::abs(s.parts.expected - want.expected) < 1e-12);
      CHECK(std::abs(s.parts.expected_overlap - want.expected_overlap) < 1e-12);
      CHECK(std::abs(s.ci - want.score()) < 1e-12);
      CHECK(std::abs(s.ci - weighted_ci_edge(g, w, e.hi, e.lo).ci) < 1e-12);
    }
  }
}

TEST_CASE("ten-node (7,8) across the first three rounds") {
  const Graph g = fixtures::ten_node();
  const IterationResult r = iterate_to_fixpoint(g, 4);
  REQUIRE(r.trace.rounds.size() == 4);
  const EdgeId e = g.edge_id(g.id_of("7"), g.id_of("8"));
  CHECK(std::abs(scores_by_edge(g, r.trace.rounds[0])[e] - -1.21875) < 1e-12);
  CHECK(std::abs(scores_by_edge(g, r.trace.rounds[1])[e] - 0.3901) < 1e-4);
  CHECK(std::abs(scores_by_edge(g, r.trace.rounds[2])[e] - 0.29974) < 1e-5);
  CHECK(std::abs(scores_by_edge(g, r.trace.rounds[3])[e] - 0.30419) < 1e-5);
}

TEST_CASE("ten-node converges with intra edges ranked above inter edges") {
  const Graph g = fixtures::ten_node();
  const IterationResult r = iterate_to_fixpoint(g);
  CHECK(r.trace.converged);
  CHECK(r.trace.rounds.size() == r.trace.convergence_round + 1);
  CHECK(r.trace.signs.size() == r.trace.rounds.size());
  const auto& last = r.trace.rounds.back();
  const auto& prev = r.trace.rounds[r.trace.rounds.size() - 2];
  CHECK(same_order(last, prev));
  CHECK(sign_vector(g, last) == sign_vector(g, prev));
}

TEST_CASE("complete graph is stable after one reweighting round") {
  const Graph g = test::complete(4);
  const IterationResult r = iterate_to_fixpoint(g);
  CHECK(r.trace.converged);
  CHECK(r.trace.convergence_round == 1);
  for (const auto& s : r.scores) CHECK(std::abs(s.ci - r.scores.front().ci) < 1e-12);
}

TEST_CASE("five-cycle converges with all edges tied every round") {
  const Graph g = test::cycle(5);
  const IterationResult r = iterate_to_fixpoint(g);
  CHECK(r.trace.converged);
  CHECK(r.trace.convergence_round <= 3);
  for (const auto& round : r.trace.rounds) {
    for (const auto& s : round) CHECK(std::abs(s.ci - round.front().ci) < 1e-12);
    for (std::size_t t = 1; t < round.size(); ++t) CHECK(round[t - 1].key < round[t].key);
  }
}

TEST_CASE("cap of one returns the unweighted round") {
  const Graph g = fixtures::ten_node();
  const IterationResult r = iterate_to_fixpoint(g, 1);
  CHECK(r.trace.rounds.size() == 1);
  CHECK_FALSE(r.trace.converged);
  CHECK(same_order(r.scores, ci_all(g)));
  CHECK_THROWS_AS(iterate_to_fixpoint(g, 0), Error);
}

TEST_CASE("cap bounds the trace length") {
  const Graph g = fixtures::ten_node();
  for (std::size_t cap = 1; cap <= 6; ++cap) {
    const IterationResult r = iterate_to_fixpoint(g, cap);
    CHECK(r.trace.rounds.size() <= cap);
  }
}

TEST_CASE("reruns give identical traces") {
  std::mt19937 rng(9);
  for (int t = 0; t < 10; ++t) {
    const Graph g = test::random_graph(rng, 40, 0.1);
    const IterationResult a = iterate_to_fixpoint(g);
    const IterationResult b = iterate_to_fixpoint(g);
    REQUIRE(a.trace.rounds.size() == b.trace.rounds.size());
    CHECK(a.trace.signs == b.trace.signs);
    for (std::size_t r = 0; r < a.trace.rounds.size(); ++r) {
      for (std::size_t s = 0; s < a.trace.rounds[r].size(); ++s) {
        CHECK(a.trace.rounds[r][s].edge == b.trace.rounds[r][s].edge);
        CHECK(a.trace.rounds[r][s].ci == b.trace.rounds[r][s].ci);
      }
    }
  }
}
