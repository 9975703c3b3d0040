#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "ciia/intensity.hpp"
#include "ciia/iteration.hpp"
#include "ciia/kernels.hpp"
#include "support.hpp"

using namespace ciia;

namespace {

bool near(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("scalar table is always available") {
  CHECK(kernels::supported(kernels::Isa::Scalar));
  CHECK(kernels::scalar_table().isa == kernels::Isa::Scalar);
  CHECK(kernels::parse_isa("scalar") == kernels::Isa::Scalar);
  CHECK(kernels::parse_isa("avx2") == kernels::Isa::Avx2);
  CHECK_THROWS(kernels::parse_isa("sse9"));
}

TEST_CASE("scalar kernels on small inputs") {
  const auto& k = kernels::scalar_table();
  const double x[] = {1, 2, 3};
  const double y[] = {4, 5, 6};
  const double z[] = {1, 0, 2};
  const std::uint32_t idx[] = {2, 0, 2};
  CHECK(k.sum(x, 3) == 6);
  CHECK(k.dot(x, y, 3) == 32);
  CHECK(k.dot3(x, y, z, 3) == 40);
  CHECK(k.gather_sum(idx, 3, y) == 16);
  CHECK(k.sum(x, 0) == 0);
}

TEST_CASE("vector kernels agree with the scalar reference") {
  const kernels::KernelTable* v = kernels::avx2_table();
  if (v == nullptr) {
    MESSAGE("AVX2 not available; equivalence not exercised");
    return;
  }
  const auto& s = kernels::scalar_table();
  std::mt19937 rng(10);
  std::uniform_real_distribution<double> val(-2.0, 2.0);
  for (std::size_t n = 0; n < 100; ++n) {
    std::vector<double> x(n), y(n), z(n), table(64);
    std::vector<std::uint32_t> idx(n);
    for (std::size_t t = 0; t < n; ++t) {
      x[t] = val(rng);
      y[t] = val(rng);
      z[t] = val(rng);
      idx[t] = static_cast<std::uint32_t>(rng() % table.size());
    }
    for (auto& t : table) t = val(rng);
    CHECK(near(v->sum(x.data(), n), s.sum(x.data(), n)));
    CHECK(near(v->dot(x.data(), y.data(), n), s.dot(x.data(), y.data(), n)));
    CHECK(near(v->dot3(x.data(), y.data(), z.data(), n), s.dot3(x.data(), y.data(), z.data(), n)));
    CHECK(near(v->gather_sum(idx.data(), n, table.data()), s.gather_sum(idx.data(), n, table.data())));
  }
}

TEST_CASE("weighted scores agree across kernel tables") {
  if (!kernels::supported(kernels::Isa::Avx2)) {
    MESSAGE("AVX2 not available; equivalence not exercised");
    return;
  }
  const kernels::Isa before = kernels::active().isa;
  std::mt19937 rng(15);
  for (int t = 0; t < 20; ++t) {
    const Graph g = test::random_graph(rng, 60, 0.15);
    const WeightMap w = weights_from_scores(g, ci_all(g));
    kernels::select(kernels::Isa::Scalar);
    const auto a = scores_by_edge(g, weighted_ci_all(g, w));
    kernels::select(kernels::Isa::Avx2);
    const auto b = scores_by_edge(g, weighted_ci_all(g, w));
    for (EdgeId e = 0; e < g.edge_count(); ++e) CHECK(std::abs(a[e] - b[e]) < 1e-12);
  }
  kernels::select(before);
}
