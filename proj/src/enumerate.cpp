#include "mstd/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

namespace mstd {

namespace {

std::uint64_t reverse_bits(std::uint64_t v, int width) {
  std::uint64_t r = 0;
  for (int i = 0; i < width; ++i) r |= ((v >> i) & 1U) << (width - 1 - i);
  return r;
}

}  // namespace

std::vector<Partition> make_partitions(int diameter_min, int diameter_max) {
  if (diameter_min < 0 || diameter_min > diameter_max || diameter_max > kMaxEnumerationDiameter)
    throw std::domain_error("diameter range must satisfy 0 <= min <= max <= 63");
  std::vector<Partition> parts;
  for (int d = diameter_min; d <= diameter_max; ++d) {
    const int bits = d == 0 ? 0 : std::min(d - 1, kPartitionPrefixBits);
    // A set holding position 1 precedes one that lacks it, so patterns run
    // from "all low positions present" down, reading position 1 as the
    // most significant bit.
    for (std::uint64_t rank = (std::uint64_t{1} << bits); rank-- > 0;) {
      Partition p;
      p.id = parts.size();
      p.diameter = d;
      p.prefix_bits = bits;
      p.prefix = reverse_bits(rank, bits) << 1;
      parts.push_back(p);
    }
  }
  return parts;
}

}  // namespace mstd
