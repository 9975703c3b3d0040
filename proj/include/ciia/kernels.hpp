#pragma once

// Reduction kernels behind the weighted intensity scorer.
//
// Each kernel has a scalar reference version and, on x86-64, an AVX2 version.
// The active table is picked once at startup from CPU features; setting
// CIIA_ISA=scalar in the environment (or calling select()) forces the
// reference path. Vector versions reassociate the sums, so they agree with
// the reference to rounding, not bitwise.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace ciia::kernels {

enum class Isa { Scalar, Avx2 };

struct KernelTable {
  Isa isa;
  const char* name;
  // sum_t x[t]
  double (*sum)(const double* x, std::size_t n);
  // sum_t x[t] * y[t]
  double (*dot)(const double* x, const double* y, std::size_t n);
  // sum_t x[t] * y[t] * z[t]
  double (*dot3)(const double* x, const double* y, const double* z, std::size_t n);
  // sum_t table[idx[t]]
  double (*gather_sum)(const std::uint32_t* idx, std::size_t n, const double* table);
};

const KernelTable& scalar_table() noexcept;
/// nullptr when the build or the CPU lacks AVX2.
const KernelTable* avx2_table() noexcept;

bool supported(Isa isa) noexcept;
/// Best supported ISA, honoring CIIA_ISA.
Isa detect() noexcept;
/// Switches the process-wide table; throws std::invalid_argument if unsupported.
void select(Isa isa);
const KernelTable& active() noexcept;

std::string_view name(Isa isa) noexcept;
/// Parses "scalar" / "avx2"; throws std::invalid_argument otherwise.
Isa parse_isa(std::string_view text);

inline double sum(std::span<const double> x) { return active().sum(x.data(), x.size()); }
inline double dot(std::span<const double> x, std::span<const double> y) {
  return active().dot(x.data(), y.data(), x.size());
}
inline double dot3(std::span<const double> x, std::span<const double> y, std::span<const double> z) {
  return active().dot3(x.data(), y.data(), z.data(), x.size());
}
inline double gather_sum(std::span<const std::uint32_t> idx, const double* table) {
  return active().gather_sum(idx.data(), idx.size(), table);
}

namespace detail {
// Defined in kernels_avx2.cpp; null when not compiled for x86-64.
const KernelTable* avx2_table_if_compiled() noexcept;
}  // namespace detail

}  // namespace ciia::kernels
