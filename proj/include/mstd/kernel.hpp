#pragma once

#include <cstdint>
#include <vector>

#include "mstd/int_set.hpp"

// Sumset and difference-set kernels.
//
// Two representations are used. Sets whose diameter fits a machine word are
// handled entirely in registers (the enumeration hot path). Everything else
// goes through a dense word bitset over [min, max], falling back to sorting
// the pairwise values when the window would be much wider than n^2.
namespace mstd::kernel {

/// Dense bitset over a window [offset, offset + nbits).
class DenseBits {
 public:
  DenseBits() = default;
  DenseBits(Int offset, std::size_t nbits);

  /// Bits of `a` relative to a.min().
  static DenseBits of(const IntSet& a);

  Int offset() const noexcept { return offset_; }
  std::size_t nbits() const noexcept { return nbits_; }
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
  std::size_t count() const noexcept;

  /// this |= (src << shift), truncated to this window.
  void or_shifted(const DenseBits& src, std::size_t shift) noexcept;

  IntSet to_set() const;

 private:
  Int offset_ = 0;
  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

struct Counts {
  std::size_t sum_size = 0;
  std::size_t diff_size = 0;
};

/// True when the dense path is cheaper than sorting all pairwise values.
bool prefer_dense(const IntSet& a);

IntSet sumset_dense(const IntSet& a);
IntSet diffset_dense(const IntSet& a);
IntSet sumset_sparse(const IntSet& a);
IntSet diffset_sparse(const IntSet& a);

/// |A+A| and |A-A| without materializing either set.
Counts counts(const IntSet& a);

// --- single-word kernels; bit i of `mask` is element i, bit 0 set ---------

/// |A+A| and |A-A| for a set of diameter < 64 given as a mask.
Counts mask_counts(std::uint64_t mask) noexcept;

/// Reverse of the low (diameter + 1) bits, i.e. the mask of diameter - A.
std::uint64_t mask_reflect(std::uint64_t mask, int diameter) noexcept;

/// gcd of all elements (= gcd of gaps since bit 0 is set); 0 for {0}.
std::uint64_t mask_gcd(std::uint64_t mask) noexcept;

/// Lexicographically <= its reflection (compared as sorted element lists).
bool mask_reflection_canonical(std::uint64_t mask, int diameter) noexcept;

/// A is an arithmetic progression together with at most two extra elements.
bool mask_is_ap_plus_two(std::uint64_t mask) noexcept;

}  // namespace mstd::kernel
