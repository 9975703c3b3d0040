#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace ciia {

/// Seedable generator with a fixed algorithm: std::mt19937_64 for the bit
/// stream (specified exactly by the standard) plus hand-written conversions,
/// since the std distributions differ between library vendors.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in [0, bound); returns 0 for bound == 0. Lemire's multiply-shift
  /// with rejection, so the result is unbiased.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) return 0;
    __extension__ using u128 = unsigned __int128;
    u128 product = static_cast<u128>(next()) * bound;
    auto low = static_cast<std::uint64_t>(product);
    if (low < bound) {
      const std::uint64_t threshold = -bound % bound;
      while (low < threshold) {
        product = static_cast<u128>(next()) * bound;
        low = static_cast<std::uint64_t>(product);
      }
    }
    return static_cast<std::uint64_t>(product >> 64);
  }

  bool bernoulli(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return uniform() < p;
  }

  /// Fisher-Yates, back to front.
  template <class T>
  void shuffle(std::span<T> items) {
    for (std::size_t t = items.size(); t > 1; --t) {
      const std::size_t pick = static_cast<std::size_t>(below(t));
      std::swap(items[t - 1], items[pick]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ciia
