#include "ciia/bench.hpp"

#include <algorithm>
#include <charconv>

#include "ciia/detect.hpp"
#include "ciia/louvain.hpp"
#include "ciia/netgen.hpp"

namespace ciia {

namespace {

std::size_t parse_count(std::string_view text, std::string_view whole) {
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size()) {
    throw Error("invalid size range '" + std::string(whole) + "'");
  }
  return value;
}

Graph make_graph(const BenchSpec& spec, std::size_t n, std::uint64_t seed) {
  if (spec.family == Family::BA) return gen_ba({n, spec.m_attach, seed});
  const auto [p_in, p_out] = planted_params(n, spec.groups, spec.avg_degree, spec.ratio);
  PlantedConfig config;
  config.sizes.assign(spec.groups, n / spec.groups);
  config.p_in = p_in;
  config.p_out = p_out;
  config.seed = seed;
  return gen_planted(config).graph;
}

}  // namespace

std::vector<std::size_t> parse_size_range(std::string_view text) {
  const auto first = text.find(':');
  if (first == std::string_view::npos) return {parse_count(text, text)};
  const auto second = text.find(':', first + 1);
  if (second == std::string_view::npos) throw Error("invalid size range '" + std::string(text) + "'");
  const std::size_t lo = parse_count(text.substr(0, first), text);
  const std::size_t hi = parse_count(text.substr(first + 1, second - first - 1), text);
  const std::size_t step = parse_count(text.substr(second + 1), text);
  if (step == 0 || lo > hi) throw Error("invalid size range '" + std::string(text) + "'");
  std::vector<std::size_t> sizes;
  for (std::size_t n = lo; n <= hi; n += step) sizes.push_back(n);
  return sizes;
}

std::vector<std::string> parse_algo_list(std::string_view text) {
  std::vector<std::string> algos;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    std::string name(text.substr(pos, comma - pos));
    if (name != "ci" && name != "ciia" && name != "louvain") {
      throw Error("unknown algorithm '" + name + "'");
    }
    if (std::find(algos.begin(), algos.end(), name) != algos.end()) {
      throw Error("algorithm '" + name + "' listed twice");
    }
    algos.push_back(std::move(name));
    pos = comma + 1;
  }
  return algos;
}

Family parse_family(std::string_view text) {
  if (text == "ba") return Family::BA;
  if (text == "planted") return Family::Planted;
  throw Error("unknown graph family '" + std::string(text) + "'");
}

std::string_view family_name(Family family) noexcept { return family == Family::BA ? "ba" : "planted"; }

std::vector<BenchRow> run_bench(const BenchSpec& spec) {
  if (spec.sizes.empty()) throw Error("bench needs at least one size");
  if (spec.algos.empty()) throw Error("bench needs at least one algorithm");
  if (spec.seeds == 0) throw Error("bench needs at least one seed");
  std::vector<BenchRow> rows;
  for (std::size_t n : spec.sizes) {
    for (std::size_t s = 0; s < spec.seeds; ++s) {
      const std::uint64_t seed = spec.first_seed + s;
      const Graph g = make_graph(spec, n, seed);
      for (const auto& algo : spec.algos) {
        AlgoReport r;
        if (algo == "louvain") {
          LouvainConfig lc;
          lc.seed = seed;
          r = louvain(g, lc);
        } else {
          DetectConfig dc;
          dc.round_cap = spec.round_cap;
          r = detect(g, algo == "ci" ? Algorithm::CI : Algorithm::CIIA, dc);
        }
        BenchRow row;
        row.family = std::string(family_name(spec.family));
        row.n = g.node_count();
        row.m = g.edge_count();
        row.algo = algo;
        row.seed = seed;
        row.modularity = r.modularity;
        row.time_ms = spec.timing ? r.time_ms : 0.0;
        row.iterations = r.iterations;
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

}  // namespace ciia
