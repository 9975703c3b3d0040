#include "ciia/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace ciia::kernels {

namespace {

double sum_scalar(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t t = 0; t < n; ++t) acc += x[t];
  return acc;
}

double dot_scalar(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t t = 0; t < n; ++t) acc += x[t] * y[t];
  return acc;
}

double dot3_scalar(const double* x, const double* y, const double* z, std::size_t n) {
  double acc = 0.0;
  for (std::size_t t = 0; t < n; ++t) acc += x[t] * y[t] * z[t];
  return acc;
}

double gather_sum_scalar(const std::uint32_t* idx, std::size_t n, const double* table) {
  double acc = 0.0;
  for (std::size_t t = 0; t < n; ++t) acc += table[idx[t]];
  return acc;
}

constexpr KernelTable kScalar{Isa::Scalar, "scalar", sum_scalar, dot_scalar, dot3_scalar,
                              gather_sum_scalar};

bool cpu_has_avx2() noexcept {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable& table_for(Isa isa) noexcept {
  if (isa == Isa::Avx2) {
    if (const KernelTable* t = avx2_table()) return *t;
  }
  return kScalar;
}

std::atomic<const KernelTable*>& current() noexcept {
  static std::atomic<const KernelTable*> table{&table_for(detect())};
  return table;
}

}  // namespace

const KernelTable& scalar_table() noexcept { return kScalar; }

const KernelTable* avx2_table() noexcept {
  if (!cpu_has_avx2()) return nullptr;
  return detail::avx2_table_if_compiled();
}

bool supported(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
      return avx2_table() != nullptr;
  }
  return false;
}

Isa detect() noexcept {
  if (const char* env = std::getenv("CIIA_ISA")) {
    try {
      const Isa wanted = parse_isa(env);
      if (supported(wanted)) return wanted;
    } catch (const std::invalid_argument&) {
    }
  }
  return supported(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
}

void select(Isa isa) {
  if (!supported(isa)) {
    throw std::invalid_argument("instruction set '" + std::string(name(isa)) +
                                "' is not available on this machine");
  }
  current().store(&table_for(isa));
}

const KernelTable& active() noexcept { return *current().load(std::memory_order_relaxed); }

std::string_view name(Isa isa) noexcept {
  return isa == Isa::Avx2 ? "avx2" : "scalar";
}

Isa parse_isa(std::string_view text) {
  if (text == "scalar") return Isa::Scalar;
  if (text == "avx2") return Isa::Avx2;
  throw std::invalid_argument("unknown instruction set '" + std::string(text) + "'");
}

}  // namespace ciia::kernels
