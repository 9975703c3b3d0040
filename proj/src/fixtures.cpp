#include "ciia/fixtures.hpp"

#include <cmath>
#include <ostream>

#include "ciia/detect.hpp"
#include "ciia/intensity.hpp"
#include "ciia/iteration.hpp"
#include "ciia/report.hpp"

namespace ciia::fixtures {

namespace {

constexpr std::string_view kFlorentineNumbered =
    "# Florentine families, numbered 1..15\n"
    "7 8\n6 7\n14 7\n6 8\n14 8\n13 5\n12 15\n10 11\n1 2\n2 4\n"
    "3 4\n2 5\n10 12\n9 6\n2 3\n12 2\n9 2\n10 4\n14 10\n3 8\n";

constexpr LabelledScore kFlorentineScores[] = {
    {"7", "8", 2.75},     {"6", "7", 2.15},    {"14", "7", 1.65},    {"6", "8", 1.625},
    {"14", "8", 0.975},   {"13", "5", 0.8},    {"12", "15", 0.675},  {"10", "11", 0.675},
    {"1", "2", 0.525},    {"2", "4", -0.025},  {"3", "4", -0.325},   {"2", "5", -0.35},
    {"10", "12", -0.75},  {"9", "6", -1.0},    {"2", "3", -1.025},   {"9", "2", -1.25},
    {"10", "4", -1.3},    {"12", "2", -1.4},   {"14", "10", -1.75},  {"3", "8", -2.9},
};

constexpr std::string_view kTenNode =
    "# ten-node reweighting example\n"
    "5 6\n0 8\n6 9\n0 1\n1 8\n4 7\n1 2\n0 7\n3 4\n5 9\n3 7\n7 8\n3 5\n1 9\n8 9\n1 4\n";

const std::vector<LabelledScore> kTenNodeRounds[] = {
    {{"5", "6", 1.625},   {"0", "8", 1.53125},  {"6", "9", 0.78125},  {"0", "1", 0.65625},
     {"1", "8", 0.65625}, {"4", "7", 0.46875},  {"1", "2", 0.40625},  {"0", "7", 0.25},
     {"3", "4", -0.25},   {"5", "9", -0.625},   {"3", "7", -0.65625}, {"7", "8", -1.21875},
     {"3", "5", -1.8125}, {"1", "9", -2.0},     {"8", "9", -2.21875}, {"1", "4", -2.3125}},
    {{"5", "6", 1.4375},  {"5", "9", 1.3953},   {"6", "9", 1.375},    {"3", "7", 1.3149},
     {"3", "4", 1.1264},  {"0", "8", 1.0619},   {"1", "2", 0.781},    {"1", "8", 0.6931},
     {"4", "7", 0.5962},  {"3", "5", 0.5921},   {"0", "1", 0.5913},   {"0", "7", 0.3955},
     {"7", "8", 0.3901},  {"8", "9", 0.2495},   {"1", "9", 0.1365},   {"1", "4", -0.0323}},
    {{"5", "6", 1.3478},  {"6", "9", 1.2693},   {"5", "9", 1.2098},   {"3", "4", 1.0987},
     {"4", "7", 1.0104},  {"0", "8", 1.0026},   {"3", "7", 0.99},     {"1", "2", 0.7751},
     {"0", "1", 0.6307},  {"1", "8", 0.6045},   {"0", "7", 0.443},    {"7", "8", 0.2997},
     {"8", "9", -0.1438}, {"1", "4", -0.1525},  {"1", "9", -0.2203},  {"3", "5", -0.2508}},
    {{"5", "6", 1.4985},  {"6", "9", 1.4637},   {"5", "9", 1.4053},   {"3", "4", 1.1745},
     {"3", "7", 1.114},   {"4", "7", 1.1129},   {"0", "8", 1.0255},   {"1", "2", 0.7756},
     {"0", "1", 0.6716},  {"1", "8", 0.5899},   {"0", "7", 0.3627},   {"7", "8", 0.3042},
     {"3", "5", -0.1228}, {"8", "9", -0.1746},  {"1", "9", -0.3161},  {"1", "4", -0.3181}},
};

class Checker {
 public:
  explicit Checker(std::ostream& out) : out_(out) {}

  void close(std::string_view name, double expected, double actual, double tol) {
    const bool ok = std::abs(expected - actual) <= tol;
    line(name, ok, expected, actual, tol);
  }

  void flag(std::string_view name, bool ok, std::string_view detail) {
    all_ &= ok;
    out_ << (ok ? "PASS " : "FAIL ") << name;
    if (!ok) out_ << ": " << detail;
    out_ << '\n';
  }

  bool all() const { return all_; }

 private:
  void line(std::string_view name, bool ok, double expected, double actual, double tol) {
    all_ &= ok;
    out_ << (ok ? "PASS " : "FAIL ") << name;
    if (!ok) {
      out_ << ": expected " << format_real(expected) << ", got " << format_real(actual) << " (tol "
           << format_real(tol) << ")";
    }
    out_ << '\n';
  }

  std::ostream& out_;
  bool all_ = true;
};

// Largest deviation between a computed round and a reference one, plus
// whether the edge order matches.
struct RoundDiff {
  double worst = 0.0;
  bool order_matches = true;
};

RoundDiff compare_round(const Graph& g, std::span<const EdgeScore> computed,
                        std::span<const LabelledScore> reference) {
  RoundDiff diff;
  const std::vector<double> by_edge = scores_by_edge(g, computed);
  for (std::size_t t = 0; t < reference.size(); ++t) {
    const EdgeId e = g.edge_id(g.id_of(reference[t].a), g.id_of(reference[t].b));
    diff.worst = std::max(diff.worst, std::abs(by_edge[e] - reference[t].ci));
    if (t < computed.size() && computed[t].edge != e) diff.order_matches = false;
  }
  return diff;
}

}  // namespace

std::string_view florentine_numbered_text() { return kFlorentineNumbered; }
Graph florentine_numbered() { return parse_edgelist_string(kFlorentineNumbered); }
std::span<const LabelledScore> florentine_numbered_scores() { return kFlorentineScores; }

std::string_view ten_node_text() { return kTenNode; }
Graph ten_node() { return parse_edgelist_string(kTenNode); }
std::span<const std::vector<LabelledScore>> ten_node_rounds() { return kTenNodeRounds; }

bool run_selftest(std::ostream& out) {
  Checker check(out);

  const Graph flo = florentine_numbered();
  const auto flo_scores = ci_all(flo);
  const RoundDiff flo_diff = compare_round(flo, flo_scores, florentine_numbered_scores());
  check.close("florentine.scores", 0.0, flo_diff.worst, 1e-9);

  const IntensityParts p24 = ci_components(flo, flo.id_of("2"), flo.id_of("4"));
  check.close("florentine.pair_2_4.actual", kFlorentinePair24Parts[0], p24.actual, 1e-12);
  check.close("florentine.pair_2_4.actual_overlap", kFlorentinePair24Parts[1], p24.actual_overlap, 1e-12);
  check.close("florentine.pair_2_4.expected", kFlorentinePair24Parts[2], p24.expected, 1e-12);
  check.close("florentine.pair_2_4.expected_overlap", kFlorentinePair24Parts[3], p24.expected_overlap,
              1e-12);

  const Graph ten = ten_node();
  const IterationResult iter = iterate_to_fixpoint(ten, 4);
  const auto& rounds = iter.trace.rounds;
  for (std::size_t r = 0; r < ten_node_rounds().size(); ++r) {
    const std::string name = "ten_node.round_" + std::to_string(r);
    if (r >= rounds.size()) {
      check.flag(name, false, "round was not computed");
      continue;
    }
    const RoundDiff d = compare_round(ten, rounds[r], ten_node_rounds()[r]);
    check.close(name, 0.0, d.worst, r == 0 ? 1e-9 : 1e-4);
    check.flag(name + ".order", d.order_matches, "edge order differs from the reference ranking");
  }
  const EdgeId e78 = ten.edge_id(ten.id_of("7"), ten.id_of("8"));
  for (std::size_t r = 1; r <= 3 && r < rounds.size(); ++r) {
    check.close("ten_node.pair_7_8.round_" + std::to_string(r), kTenNodePair78Rounds[r - 1],
                scores_by_edge(ten, rounds[r])[e78], 1e-4);
  }

  check.close("florentine.ci.modularity", kFlorentineCiModularity, detect(flo, Algorithm::CI).modularity,
              1e-9);
  check.close("ten_node.ci.modularity", kTenNodeCiModularity, detect(ten, Algorithm::CI).modularity, 1e-9);
  const AlgoReport ciia = detect(ten, Algorithm::CIIA);
  check.close("ten_node.ciia.modularity", kTenNodeCiiaModularity, ciia.modularity, 1e-9);
  const std::size_t intra = intra_edge_count(ten, ciia.partition);
  check.flag("ten_node.ciia.edge_split",
             intra == kTenNodeIntraEdges && ten.edge_count() - intra == kTenNodeInterEdges,
             std::to_string(intra) + " intra / " + std::to_string(ten.edge_count() - intra) + " inter");

  out << (check.all() ? "selftest: all fixtures passed\n" : "selftest: FAILED\n");
  return check.all();
}

}  // namespace ciia::fixtures
