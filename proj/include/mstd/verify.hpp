#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mstd/int_set.hpp"
#include "mstd/random.hpp"
#include "mstd/rational_set.hpp"
#include "mstd/report.hpp"

// Machine checks of statements about sum-dominance over explicit finite
// grids. Each check returns a VerificationReport whose witnesses have been
// re-evaluated before emission. Grids are split into fixed work units, so
// reports do not depend on the worker count.
namespace mstd {

/// Window for the rational parameters of I_n u {x, y}: either fixed, or
/// [lo_per_n * n, hi_per_n * n] for each n.
struct ParameterWindow {
  Int lo_per_n = -2;
  Int hi_per_n = 3;
  std::optional<Interval> fixed;

  Interval for_n(Int n) const {
    return fixed ? *fixed : Interval{lo_per_n * n, hi_per_n * n};
  }
};

/// Sum-dominant sets among canonical sets with |A| <= max_size and
/// diameter <= max_diameter (there should be none below size 8).
VerificationReport verify_small_cardinality(int max_size, int max_diameter,
                                            unsigned workers = 1);

/// I_n u {x, y} for n <= n_max and rationals x <= y of denominator <= q_max
/// in the window; x == y covers a single insertion.
VerificationReport verify_ap_plus_two(int n_max, const ParameterWindow& window, int q_max,
                                      unsigned workers = 1);

/// Single configuration of the above: I_n u points, classified exactly.
VerificationReport verify_ap_plus_two_points(int n, const RationalSet& points);

/// |A-A| >= |A+A| + 1 for A = I_n u {x}, n >= 2, x a rational of denominator
/// <= q_max with x - 1/2 not an integer, x not in {-1, n} and x not in I_n.
VerificationReport verify_remark_half(int n_max, const ParameterWindow& window, int q_max = 4,
                                      unsigned workers = 1);

/// Same statement for explicitly given points.
VerificationReport verify_remark_half_points(int n, const RationalSet& points);

/// insertion_delta(I_n, n - 1 + k) == (k + 1, k) for 2 <= n <= n_max, 1 <= k < n.
VerificationReport verify_proposition2(int n_max);

/// Corpus shared by the pair-count and cardinality-bound checks: every set
/// with min 0 and diameter <= 12, then `trials` seeded random sets of size
/// <= 12 inside [0, 64].
inline constexpr int kCorpusExhaustiveDiameter = 12;
inline constexpr Int kCorpusRandomMaxSize = 12;
inline constexpr Int kCorpusRandomWindow = 64;

/// equal_sum_pairs(A) >= equal_diff_pairs(A) / 2 over the corpus.
VerificationReport verify_observation6(std::uint64_t trials, std::uint64_t seed = kDefaultSeed,
                                       unsigned workers = 1);

/// Upper bounds n(n+1)/2 and n(n-1)+1, their collision-corrected lower
/// counterparts, and equality for Sidon sets, over the corpus.
VerificationReport verify_cardinality_bounds(std::uint64_t trials,
                                             std::uint64_t seed = kDefaultSeed,
                                             unsigned workers = 1);

/// Every set A = c - A with min 0 and diameter <= max_diameter is balanced.
VerificationReport verify_symmetric_balanced(int max_diameter);

/// a_k > a_{k-1} + a_{k-r} for every k >= r + 1 (1-based).
bool check_growth_condition(std::span<const Int> terms, Int r);

/// Strictly increasing nonnegative terms satisfying the growth condition.
class GrowthSequence {
 public:
  /// Throws std::domain_error when the terms or the condition are invalid.
  GrowthSequence(std::vector<Int> terms, Int r);

  /// 0, 1, 2, 3, 5, 8, ... (count terms), r = 3.
  static GrowthSequence fibonacci(std::size_t count);
  /// num^k * den^(count-1-k) for k < count: ratio num/den scaled to integers.
  static GrowthSequence geometric(Int num, Int den, std::size_t count, Int r);

  const std::vector<Int>& terms() const noexcept { return terms_; }
  Int r() const noexcept { return r_; }

 private:
  std::vector<Int> terms_;
  Int r_;
};

struct GrowthCriterionParams {
  Int r = 1;
  Int n = 0;
  Int ell = 0;
  Int m = 0;
  Interval window;  // range of the added integers b_i

  Int subset_size() const { return 2 * r + n + ell; }
  Int new_sum_budget() const { return m * subset_size() + m * (m + 1) / 2; }
  Int guaranteed_deficit() const { return ell * (n + 1); }
  bool admissible() const { return new_sum_budget() <= guaranteed_deficit(); }
  bool strictly_admissible() const { return new_sum_budget() < guaranteed_deficit(); }
};

/// Checks S (the prefix of size 2r + n + ell, plus up to subset_budget random
/// subsets of that size) for deficit |S-S| - |S+S| >= ell(n+1), then S with
/// every b in the window (m = 1) or `tuple_samples` random m-tuples (m >= 2).
/// Throws std::domain_error when the parameters are inadmissible or the
/// terms contain a sum-dominant subset of size <= 2r + n.
VerificationReport verify_growth_criterion(const GrowthSequence& seq,
                                           const GrowthCriterionParams& params,
                                           std::uint64_t subset_budget = 0,
                                           std::uint64_t seed = kDefaultSeed,
                                           std::uint64_t tuple_samples = 1000);

/// {0,1,3,4,5} and {0,1,2,4,5} are balanced with 11 sums and 11 differences.
VerificationReport verify_five_element_witnesses();

}  // namespace mstd
