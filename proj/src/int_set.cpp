#include "mstd/int_set.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace mstd {

namespace {

void sort_unique(std::vector<Int>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void require_nonempty(const std::vector<Int>& v) {
  if (v.empty()) throw std::domain_error("operation requires a nonempty set");
}

}  // namespace

IntSet::IntSet(std::initializer_list<Int> values) : elems_(values) {
  sort_unique(elems_);
}

IntSet::IntSet(std::vector<Int> values) : elems_(std::move(values)) {
  sort_unique(elems_);
}

IntSet IntSet::from_mask(std::uint64_t mask) {
  IntSet s;
  s.elems_.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask != 0) {
    s.elems_.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return s;
}

IntSet IntSet::progression(Int first, Int step, Int length) {
  if (length < 0) throw std::domain_error("progression length must be nonnegative");
  std::vector<Int> v;
  v.reserve(static_cast<std::size_t>(length));
  for (Int i = 0; i < length; ++i) v.push_back(first + i * step);
  return IntSet(std::move(v));
}

Int IntSet::min() const {
  require_nonempty(elems_);
  return elems_.front();
}

Int IntSet::max() const {
  require_nonempty(elems_);
  return elems_.back();
}

Int IntSet::diameter() const { return max() - min(); }

bool IntSet::contains(Int x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

std::uint64_t IntSet::to_mask() const {
  if (diameter() >= 64) throw std::domain_error("set does not fit a 64-bit mask");
  std::uint64_t mask = 0;
  const Int lo = min();
  for (Int a : elems_) mask |= std::uint64_t{1} << (a - lo);
  return mask;
}

IntSet IntSet::translated(Int t) const {
  IntSet s = *this;
  for (Int& a : s.elems_) a += t;
  return s;
}

IntSet IntSet::scaled(Int c) const {
  std::vector<Int> v = elems_;
  for (Int& a : v) a *= c;
  return IntSet(std::move(v));
}

IntSet IntSet::negated() const { return scaled(-1); }

IntSet IntSet::with(Int x) const {
  std::vector<Int> v = elems_;
  v.push_back(x);
  return IntSet(std::move(v));
}

IntSet IntSet::united(const IntSet& other) const {
  std::vector<Int> v;
  v.reserve(size() + other.size());
  std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(v));
  IntSet s;
  s.elems_ = std::move(v);
  return s;
}

IntSet IntSet::without(const IntSet& other) const {
  IntSet s;
  std::set_difference(begin(), end(), other.begin(), other.end(),
                      std::back_inserter(s.elems_));
  return s;
}

}  // namespace mstd
