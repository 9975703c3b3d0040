#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ciia/report.hpp"

namespace ciia {

enum class Family { BA, Planted };

struct BenchSpec {
  Family family = Family::Planted;
  std::vector<std::size_t> sizes;
  std::vector<std::string> algos;  // ci, ciia, louvain
  std::size_t seeds = 1;           // graph and Louvain seeds 0..seeds-1
  std::uint64_t first_seed = 0;
  std::size_t m_attach = 1;
  std::size_t groups = 10;
  double avg_degree = 6.0;
  double ratio = 100.0;
  std::size_t round_cap = kDefaultRoundCap;
  bool timing = true;  // false writes time_ms as 0 for byte-stable output
};

/// "a:b:step" (inclusive) or a single size. Throws on malformed input, a zero
/// step, or a > b.
std::vector<std::size_t> parse_size_range(std::string_view text);

/// Comma-separated algorithm names. Throws on an unknown or repeated name.
std::vector<std::string> parse_algo_list(std::string_view text);

Family parse_family(std::string_view text);
std::string_view family_name(Family family) noexcept;

/// One row per (size, seed, algorithm). The graph for (size, seed) is
/// generated once and shared by every algorithm; Louvain runs a single pass
/// with the same seed. Rows come out ordered by size, seed, then the order of
/// `spec.algos`.
std::vector<BenchRow> run_bench(const BenchSpec& spec);

}  // namespace ciia
