#pragma once

#include "mstd/int_set.hpp"

namespace mstd {

/// A set of exact rationals sharing one positive denominator.
///
/// Element i is numerators()[i] / denominator(). The representation is kept
/// reduced: gcd(denominator, all numerators) == 1, so equal sets compare equal.
class RationalSet {
 public:
  RationalSet() = default;
  /// Throws std::domain_error when denominator < 1.
  RationalSet(IntSet numerators, Int denominator);

  /// Integer set viewed as rationals with denominator 1.
  static RationalSet integral(IntSet values) { return RationalSet(std::move(values), 1); }

  const IntSet& numerators() const noexcept { return numerators_; }
  Int denominator() const noexcept { return denominator_; }
  std::size_t size() const noexcept { return numerators_.size(); }

  /// Union, brought over the least common denominator.
  RationalSet united(const RationalSet& other) const;

  friend bool operator==(const RationalSet&, const RationalSet&) = default;

 private:
  IntSet numerators_;
  Int denominator_ = 1;
};

}  // namespace mstd
