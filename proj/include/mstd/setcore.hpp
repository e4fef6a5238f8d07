#pragma once

#include <optional>
#include <string_view>

#include "mstd/int_set.hpp"
#include "mstd/rational_set.hpp"

namespace mstd {

enum class SetClass { SumDominant, Balanced, DifferenceDominant };

/// "sum-dominant", "balanced" or "difference-dominant".
std::string_view to_string(SetClass c) noexcept;

/// {first + i * step : 0 <= i < length}.
struct APSpec {
  Int first = 0;
  Int step = 1;
  Int length = 1;

  IntSet to_set() const { return IntSet::progression(first, step, length); }
  friend bool operator==(const APSpec&, const APSpec&) = default;
};

struct SetProfile {
  std::size_t size = 0;
  std::size_t sum_size = 0;
  std::size_t diff_size = 0;
  SetClass set_class = SetClass::Balanced;
  std::uint64_t equal_sum_pairs = 0;
  std::uint64_t equal_diff_pairs = 0;
  Int diameter = 0;
  std::optional<Int> symmetry_center;
  std::optional<APSpec> ap;

  friend bool operator==(const SetProfile&, const SetProfile&) = default;
};

/// x -> (x - shift) / scale maps the original set onto the normalized one.
struct AffineTransform {
  Int shift = 0;
  Int scale = 1;

  Int apply(Int x) const { return (x - shift) / scale; }
  Int invert(Int y) const { return y * scale + shift; }
  friend bool operator==(const AffineTransform&, const AffineTransform&) = default;
};

struct NormalizedSet {
  IntSet set;
  AffineTransform transform;
};

struct ScaledSet {
  IntSet set;
  Int scale = 1;  // every element was multiplied by this
};

struct ApDecomposition {
  APSpec ap;
  IntSet extras;
};

// All operations below throw std::domain_error on an empty set.

IntSet sumset(const IntSet& a);
IntSet diffset(const IntSet& a);
SetClass classify(const IntSet& a);
SetProfile profile(const IntSet& a);

/// Translates to min 0 and divides by the gcd of the gaps (1 for a singleton).
NormalizedSet affine_normalize(const IntSet& a);

/// Lexicographic minimum of a normalized set and its reflection.
/// Throws std::domain_error when `a` is not normalized.
IntSet reflect_canonical(const IntSet& a);

/// True when min is 0 and (for |A| >= 2) the gaps have gcd 1.
bool is_normalized(const IntSet& a);

/// Full affine canonical form: normalize, then quotient by reflection.
IntSet canonical_form(const IntSet& a);

ScaledSet scale_to_integers(const RationalSet& r);

/// The centre c = min + max when A = c - A.
std::optional<Int> is_symmetric(const IntSet& a);

std::optional<APSpec> detect_ap(const IntSet& a);

/// A = AP u E with |E| <= 2, preferring the smallest E (by size, then
/// lexicographically). Searches every removal of at most two elements.
std::optional<ApDecomposition> ap_plus_two_decomposition(const IntSet& a);

}  // namespace mstd
