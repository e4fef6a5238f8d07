#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace mstd {

using Int = std::int64_t;

/// A finite set of integers stored as a strictly increasing element list.
///
/// Every constructor sorts and deduplicates, so the invariant holds for any
/// input. Negative members are allowed; normalization is always explicit.
class IntSet {
 public:
  using const_iterator = std::vector<Int>::const_iterator;

  IntSet() = default;
  IntSet(std::initializer_list<Int> values);
  explicit IntSet(std::vector<Int> values);

  /// Elements are the positions of the set bits of `mask`.
  static IntSet from_mask(std::uint64_t mask);

  /// {first, first + step, ..., first + (length - 1) * step}.
  static IntSet progression(Int first, Int step, Int length);

  /// {0, 1, ..., n - 1}.
  static IntSet range(Int n) { return progression(0, 1, n); }

  const std::vector<Int>& elements() const noexcept { return elems_; }
  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }
  const_iterator begin() const noexcept { return elems_.begin(); }
  const_iterator end() const noexcept { return elems_.end(); }
  Int operator[](std::size_t i) const { return elems_[i]; }

  // min/max/diameter throw std::domain_error on an empty set.
  Int min() const;
  Int max() const;
  Int diameter() const;
  bool contains(Int x) const;

  /// Bitmask with bit (a - min) set for each element; requires diameter < 64.
  std::uint64_t to_mask() const;

  IntSet translated(Int t) const;
  IntSet scaled(Int c) const;
  IntSet negated() const;
  IntSet with(Int x) const;
  IntSet united(const IntSet& other) const;
  IntSet without(const IntSet& other) const;

  friend bool operator==(const IntSet&, const IntSet&) = default;
  /// Lexicographic order of the element lists.
  friend std::strong_ordering operator<=>(const IntSet& a, const IntSet& b) {
    return a.elems_ <=> b.elems_;
  }

 private:
  std::vector<Int> elems_;
};

/// Closed integer interval [lo, hi].
struct Interval {
  Int lo = 0;
  Int hi = 0;
  friend bool operator==(const Interval&, const Interval&) = default;
};

}  // namespace mstd
