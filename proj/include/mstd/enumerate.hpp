#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "mstd/int_set.hpp"
#include "mstd/kernel.hpp"

// Canonical enumeration of finite integer sets up to translation, positive
// dilation and reflection.
//
// A class is represented by its unique member A with min 0, gap gcd 1 and
// A <= diameter - A lexicographically. Sets of diameter D are bitmasks over
// [0, D] with bits 0 and D set; the interior bits 1..D-1 are split into
// partitions by fixing the low `prefix_bits` of them, which gives independent
// work units for parallel sweeps and checkpointing.
namespace mstd {

inline constexpr int kMaxEnumerationDiameter = 63;
inline constexpr int kPartitionPrefixBits = 8;

struct Partition {
  std::uint64_t id = 0;    // position in make_partitions order
  int diameter = 0;
  int prefix_bits = 0;
  std::uint64_t prefix = 0;  // mask bits within positions 1..prefix_bits
};

struct SizeBounds {
  int min = 1;
  int max = kMaxEnumerationDiameter + 1;
};

/// Partitions for every D in [diameter_min, diameter_max], ordered by D and
/// then so that concatenated walks are lexicographic in the element lists.
std::vector<Partition> make_partitions(int diameter_min, int diameter_max);

/// Every raw subset in the partition (bit 0 and bit D set) whose size lies in
/// `bounds`, in lexicographic order; calls visit(mask, size).
template <class Visit>
void walk_partition(const Partition& part, SizeBounds bounds, Visit&& visit) {
  const int d = part.diameter;
  if (d == 0) {
    if (bounds.min <= 1 && 1 <= bounds.max) visit(std::uint64_t{1}, 1);
    return;
  }
  const std::uint64_t top = std::uint64_t{1} << d;
  auto rec = [&](auto&& self, int from, std::uint64_t mask, int count) -> void {
    if (count + (d - from) + 1 < bounds.min) return;
    if (count + 2 <= bounds.max)
      for (int i = from; i < d; ++i) self(self, i + 1, mask | (std::uint64_t{1} << i), count + 1);
    if (count + 1 >= bounds.min && count + 1 <= bounds.max) visit(mask | top, count + 1);
  };
  rec(rec, part.prefix_bits + 1, std::uint64_t{1} | part.prefix,
      1 + std::popcount(part.prefix));
}

/// Canonical-representative test for a raw mask of diameter D.
inline bool is_canonical_mask(std::uint64_t mask, int diameter) noexcept {
  if (diameter == 0) return true;
  return kernel::mask_reflection_canonical(mask, diameter) && kernel::mask_gcd(mask) == 1;
}

}  // namespace mstd
