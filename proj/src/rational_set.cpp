#include "mstd/rational_set.hpp"

#include <numeric>
#include <stdexcept>

namespace mstd {

RationalSet::RationalSet(IntSet numerators, Int denominator)
    : numerators_(std::move(numerators)), denominator_(denominator) {
  if (denominator_ < 1) throw std::domain_error("denominator must be positive");
  Int g = denominator_;
  for (Int p : numerators_) g = std::gcd(g, p);
  if (g > 1) {
    std::vector<Int> reduced = numerators_.elements();
    for (Int& p : reduced) p /= g;
    numerators_ = IntSet(std::move(reduced));
    denominator_ /= g;
  }
}

RationalSet RationalSet::united(const RationalSet& other) const {
  const Int l = std::lcm(denominator_, other.denominator_);
  const IntSet mine = numerators_.scaled(l / denominator_);
  const IntSet theirs = other.numerators_.scaled(l / other.denominator_);
  return RationalSet(mine.united(theirs), l);
}

}  // namespace mstd
