#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mstd/int_set.hpp"

// Counting devices used when reasoning about |A+A| and |A-A|: gap vectors,
// the triangular table of positive differences, collision counts, the
// trivial cardinality bounds and the effect of inserting one element.
namespace mstd {

/// gaps[i] = a[i+1] - a[i].
struct GapVector {
  std::vector<Int> gaps;
  friend bool operator==(const GapVector&, const GapVector&) = default;
};

/// Row r (0-based here) holds a[j] - a[r] for j = r+1, ..., |A|-1, i.e. the
/// partial sums of the gaps starting at gap r.
struct DifferenceTable {
  std::vector<std::vector<Int>> rows;
  friend bool operator==(const DifferenceTable&, const DifferenceTable&) = default;
};

struct DeltaProfile {
  std::size_t new_sums = 0;
  std::size_t new_pos_diffs = 0;
  friend bool operator==(const DeltaProfile&, const DeltaProfile&) = default;
};

struct CardinalityBounds {
  std::uint64_t max_sum = 0;
  std::uint64_t max_diff = 0;
  friend bool operator==(const CardinalityBounds&, const CardinalityBounds&) = default;
};

/// Throws std::domain_error when |A| < 2.
GapVector gaps(const IntSet& a);

/// Throws std::domain_error when |A| < 2.
DifferenceTable difference_table(const IntSet& a);

/// Triangular text layout: a leading 0, then one indented row per gap.
std::string render_difference_table(const DifferenceTable& table);

/// Sum over positive differences v of C(mu(v), 2), where mu(v) counts index
/// pairs i < j with a[j] - a[i] = v.
std::uint64_t equal_diff_pairs(const IntSet& a);

/// Sum over sums v of C(sigma(v), 2), where sigma(v) counts index multisets
/// {i <= j} with a[i] + a[j] = v.
std::uint64_t equal_sum_pairs(const IntSet& a);

/// (n(n+1)/2, n(n-1)+1); throws std::domain_error when n < 1.
CardinalityBounds cardinality_bounds(std::int64_t n);

/// Growth of |A+A| and of the positive half of A-A when x joins A.
/// Throws std::domain_error when x is already in A.
DeltaProfile insertion_delta(const IntSet& a, Int x);

}  // namespace mstd
