#include "mstd/kernel.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace mstd::kernel {

DenseBits::DenseBits(Int offset, std::size_t nbits)
    : offset_(offset), nbits_(nbits), words_((nbits + 63) / 64, 0) {}

DenseBits DenseBits::of(const IntSet& a) {
  DenseBits bits(a.min(), static_cast<std::size_t>(a.diameter()) + 1);
  for (Int x : a) bits.set(static_cast<std::size_t>(x - a.min()));
  return bits;
}

std::size_t DenseBits::count() const noexcept {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

void DenseBits::or_shifted(const DenseBits& src, std::size_t shift) noexcept {
  const std::size_t ws = shift >> 6;
  const unsigned bs = shift & 63;
  const std::size_t n = words_.size();
  for (std::size_t j = 0; j < src.words_.size() && j + ws < n; ++j) {
    const std::uint64_t w = src.words_[j];
    if (w == 0) continue;
    words_[j + ws] |= w << bs;
    if (bs != 0 && j + ws + 1 < n) words_[j + ws + 1] |= w >> (64 - bs);
  }
  if (const unsigned tail = nbits_ & 63; tail != 0 && n > 0) {
    words_[n - 1] &= (std::uint64_t{1} << tail) - 1;
  }
}

IntSet DenseBits::to_set() const {
  std::vector<Int> v;
  v.reserve(count());
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    std::uint64_t w = words_[wi];
    while (w != 0) {
      v.push_back(offset_ + static_cast<Int>(wi * 64 + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return IntSet(std::move(v));
}

bool prefer_dense(const IntSet& a) {
  const Int d = a.diameter();
  return d <= std::max<Int>(4096, 512 * static_cast<Int>(a.size()));
}

namespace {

DenseBits dense_sums(const IntSet& a) {
  const DenseBits bits = DenseBits::of(a);
  DenseBits out(2 * a.min(), 2 * static_cast<std::size_t>(a.diameter()) + 1);
  for (Int x : a) out.or_shifted(bits, static_cast<std::size_t>(x - a.min()));
  return out;
}

DenseBits dense_diffs(const IntSet& a) {
  const DenseBits bits = DenseBits::of(a);
  const Int d = a.diameter();
  DenseBits out(-d, 2 * static_cast<std::size_t>(d) + 1);
  for (Int x : a) out.or_shifted(bits, static_cast<std::size_t>(d - (x - a.min())));
  return out;
}

std::vector<Int> sparse_sums(const IntSet& a) {
  const auto& e = a.elements();
  std::vector<Int> v;
  v.reserve(e.size() * (e.size() + 1) / 2);
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i; j < e.size(); ++j) v.push_back(e[i] + e[j]);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Positive differences only, sorted and unique.
std::vector<Int> sparse_positive_diffs(const IntSet& a) {
  const auto& e = a.elements();
  std::vector<Int> v;
  v.reserve(e.size() * (e.size() - 1) / 2);
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j) v.push_back(e[j] - e[i]);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

IntSet sumset_dense(const IntSet& a) { return dense_sums(a).to_set(); }
IntSet diffset_dense(const IntSet& a) { return dense_diffs(a).to_set(); }
IntSet sumset_sparse(const IntSet& a) { return IntSet(sparse_sums(a)); }

IntSet diffset_sparse(const IntSet& a) {
  const std::vector<Int> pos = sparse_positive_diffs(a);
  std::vector<Int> v;
  v.reserve(2 * pos.size() + 1);
  for (Int p : pos) v.push_back(-p);
  v.push_back(0);
  v.insert(v.end(), pos.begin(), pos.end());
  return IntSet(std::move(v));
}

Counts counts(const IntSet& a) {
  if (a.diameter() < 64) return mask_counts(a.to_mask());
  if (prefer_dense(a)) return {dense_sums(a).count(), dense_diffs(a).count()};
  return {sparse_sums(a).size(), 2 * sparse_positive_diffs(a).size() + 1};
}

Counts mask_counts(std::uint64_t mask) noexcept {
  std::uint64_t sum_lo = 0;
  std::uint64_t sum_hi = 0;
  std::uint64_t pos = 0;
  for (std::uint64_t m = mask; m != 0; m &= m - 1) {
    const int a = std::countr_zero(m);
    sum_lo |= mask << a;
    if (a != 0) sum_hi |= mask >> (64 - a);
    pos |= mask >> a;
  }
  const auto positives = static_cast<std::size_t>(std::popcount(pos)) - 1;
  return {static_cast<std::size_t>(std::popcount(sum_lo) + std::popcount(sum_hi)),
          2 * positives + 1};
}

std::uint64_t mask_reflect(std::uint64_t mask, int diameter) noexcept {
  std::uint64_t r = mask;
  r = ((r >> 1) & 0x5555555555555555ULL) | ((r & 0x5555555555555555ULL) << 1);
  r = ((r >> 2) & 0x3333333333333333ULL) | ((r & 0x3333333333333333ULL) << 2);
  r = ((r >> 4) & 0x0F0F0F0F0F0F0F0FULL) | ((r & 0x0F0F0F0F0F0F0F0FULL) << 4);
  r = ((r >> 8) & 0x00FF00FF00FF00FFULL) | ((r & 0x00FF00FF00FF00FFULL) << 8);
  r = ((r >> 16) & 0x0000FFFF0000FFFFULL) | ((r & 0x0000FFFF0000FFFFULL) << 16);
  r = (r >> 32) | (r << 32);
  return r >> (63 - diameter);
}

std::uint64_t mask_gcd(std::uint64_t mask) noexcept {
  if (mask & (mask >> 1)) return 1;  // two adjacent elements
  std::uint64_t g = 0;
  for (std::uint64_t m = mask & (mask - 1); m != 0; m &= m - 1) {
    g = std::gcd(g, static_cast<std::uint64_t>(std::countr_zero(m)));
    if (g == 1) break;
  }
  return g;
}

bool mask_reflection_canonical(std::uint64_t mask, int diameter) noexcept {
  const std::uint64_t diff = mask ^ mask_reflect(mask, diameter);
  // The first differing position decides; the list holding it is smaller.
  return diff == 0 || (mask & diff & (~diff + 1)) != 0;
}

bool mask_is_ap_plus_two(std::uint64_t mask) noexcept {
  const int n = std::popcount(mask);
  if (n <= 4) return true;
  int first[4];
  std::uint64_t m = mask;
  for (int& f : first) {
    f = std::countr_zero(m);
    m &= m - 1;
  }
  // The progression starts at one of the first three elements and its second
  // term is among the first four.
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      const int step = first[j] - first[i];
      int len = 0;
      for (int x = first[i]; x < 64 && ((mask >> x) & 1U); x += step) ++len;
      if (len >= n - 2) return true;
    }
  }
  return false;
}

}  // namespace mstd::kernel
