#include "ciia/kernels.hpp"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))

#include <immintrin.h>

#define CIIA_AVX2 __attribute__((target("avx2")))

namespace ciia::kernels {

namespace {

CIIA_AVX2 inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

CIIA_AVX2 double sum_avx2(const double* x, std::size_t n) {
  __m256d a0 = _mm256_setzero_pd();
  __m256d a1 = _mm256_setzero_pd();
  std::size_t t = 0;
  for (; t + 8 <= n; t += 8) {
    a0 = _mm256_add_pd(a0, _mm256_loadu_pd(x + t));
    a1 = _mm256_add_pd(a1, _mm256_loadu_pd(x + t + 4));
  }
  if (t + 4 <= n) {
    a0 = _mm256_add_pd(a0, _mm256_loadu_pd(x + t));
    t += 4;
  }
  double acc = hsum(_mm256_add_pd(a0, a1));
  for (; t < n; ++t) acc += x[t];
  return acc;
}

CIIA_AVX2 double dot_avx2(const double* x, const double* y, std::size_t n) {
  __m256d a0 = _mm256_setzero_pd();
  __m256d a1 = _mm256_setzero_pd();
  std::size_t t = 0;
  for (; t + 8 <= n; t += 8) {
    a0 = _mm256_add_pd(a0, _mm256_mul_pd(_mm256_loadu_pd(x + t), _mm256_loadu_pd(y + t)));
    a1 = _mm256_add_pd(a1, _mm256_mul_pd(_mm256_loadu_pd(x + t + 4), _mm256_loadu_pd(y + t + 4)));
  }
  if (t + 4 <= n) {
    a0 = _mm256_add_pd(a0, _mm256_mul_pd(_mm256_loadu_pd(x + t), _mm256_loadu_pd(y + t)));
    t += 4;
  }
  double acc = hsum(_mm256_add_pd(a0, a1));
  for (; t < n; ++t) acc += x[t] * y[t];
  return acc;
}

CIIA_AVX2 double dot3_avx2(const double* x, const double* y, const double* z, std::size_t n) {
  __m256d a0 = _mm256_setzero_pd();
  std::size_t t = 0;
  for (; t + 4 <= n; t += 4) {
    const __m256d xy = _mm256_mul_pd(_mm256_loadu_pd(x + t), _mm256_loadu_pd(y + t));
    a0 = _mm256_add_pd(a0, _mm256_mul_pd(xy, _mm256_loadu_pd(z + t)));
  }
  double acc = hsum(a0);
  for (; t < n; ++t) acc += x[t] * y[t] * z[t];
  return acc;
}

CIIA_AVX2 double gather_sum_avx2(const std::uint32_t* idx, std::size_t n, const double* table) {
  __m256d a0 = _mm256_setzero_pd();
  __m256d a1 = _mm256_setzero_pd();
  std::size_t t = 0;
  for (; t + 8 <= n; t += 8) {
    const __m128i i0 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(idx + t));
    const __m128i i1 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(idx + t + 4));
    a0 = _mm256_add_pd(a0, _mm256_i32gather_pd(table, i0, 8));
    a1 = _mm256_add_pd(a1, _mm256_i32gather_pd(table, i1, 8));
  }
  if (t + 4 <= n) {
    const __m128i i0 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(idx + t));
    a0 = _mm256_add_pd(a0, _mm256_i32gather_pd(table, i0, 8));
    t += 4;
  }
  double acc = hsum(_mm256_add_pd(a0, a1));
  for (; t < n; ++t) acc += table[idx[t]];
  return acc;
}

constexpr KernelTable kAvx2{Isa::Avx2, "avx2", sum_avx2, dot_avx2, dot3_avx2, gather_sum_avx2};

}  // namespace

const KernelTable* detail::avx2_table_if_compiled() noexcept { return &kAvx2; }

}  // namespace ciia::kernels

#else

namespace ciia::kernels {
const KernelTable* detail::avx2_table_if_compiled() noexcept { return nullptr; }
}  // namespace ciia::kernels

#endif
