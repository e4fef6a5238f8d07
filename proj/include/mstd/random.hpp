#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "mstd/int_set.hpp"

namespace mstd {

inline constexpr std::uint64_t kDefaultSeed = 0x5D5D;

/// splitmix64 finalizer; derives independent stream seeds from (seed, stream).
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// mt19937_64 with an unbiased bounded draw that is identical on every
/// standard library (std::uniform_int_distribution is not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [lo, hi].
  Int uniform(Int lo, Int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return lo + static_cast<Int>(engine_());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return lo + static_cast<Int>(x % span);
  }

  /// Uniform size in [1, max_size], then distinct uniform elements of [lo, hi].
  IntSet random_set(Int max_size, Int lo, Int hi) {
    const Int size = uniform(1, std::min(max_size, hi - lo + 1));
    std::set<Int> picked;
    while (static_cast<Int>(picked.size()) < size) picked.insert(uniform(lo, hi));
    return IntSet(std::vector<Int>(picked.begin(), picked.end()));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace mstd
