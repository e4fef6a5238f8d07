#pragma once

// Brute-force reference implementations. Nothing here touches the bitset
// kernel or the canonical enumerator; tests compare the library against it.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "mstd/int_set.hpp"

namespace oracle {

using mstd::Int;
using Elems = std::vector<Int>;

inline std::set<Int> sums(const Elems& a) {
  std::set<Int> s;
  for (Int x : a)
    for (Int y : a) s.insert(x + y);
  return s;
}

inline std::set<Int> diffs(const Elems& a) {
  std::set<Int> s;
  for (Int x : a)
    for (Int y : a) s.insert(x - y);
  return s;
}

inline Elems to_vec(const std::set<Int>& s) { return Elems(s.begin(), s.end()); }

inline int compare_counts(const Elems& a) {
  const auto s = sums(a).size();
  const auto d = diffs(a).size();
  return s > d ? 1 : (s < d ? -1 : 0);
}

inline std::uint64_t pairs_of(const std::map<Int, std::uint64_t>& mult) {
  std::uint64_t k = 0;
  for (const auto& [v, m] : mult) k += m * (m - 1) / 2;
  return k;
}

inline std::uint64_t equal_diff_pairs(const Elems& a) {
  std::map<Int, std::uint64_t> mult;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) ++mult[a[j] - a[i]];
  return pairs_of(mult);
}

inline std::uint64_t equal_sum_pairs(const Elems& a) {
  std::map<Int, std::uint64_t> mult;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i; j < a.size(); ++j) ++mult[a[i] + a[j]];
  return pairs_of(mult);
}

/// Translate to 0, divide by the gcd, take the lexicographically smaller of
/// the result and its mirror image.
inline Elems canonical(Elems a) {
  std::sort(a.begin(), a.end());
  const Int lo = a.front();
  for (Int& x : a) x -= lo;
  Int g = 0;
  for (Int x : a) g = std::gcd(g, x);
  if (g > 1)
    for (Int& x : a) x /= g;
  Elems r;
  for (Int x : a) r.push_back(a.back() - x);
  std::sort(r.begin(), r.end());
  return std::min(a, r);
}

/// All subsets of [0, d] that contain both 0 and d, as sorted lists.
inline std::vector<Elems> raw_subsets(int d) {
  std::vector<Elems> out;
  if (d == 0) return {Elems{0}};
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << (d - 1)); ++m) {
    Elems a{0};
    for (int i = 1; i < d; ++i)
      if ((m >> (i - 1)) & 1U) a.push_back(i);
    a.push_back(d);
    out.push_back(a);
  }
  return out;
}

inline bool is_ap(const Elems& a) {
  for (std::size_t i = 2; i < a.size(); ++i)
    if (a[i] - a[i - 1] != a[1] - a[0]) return false;
  return true;
}

/// Exhaustive: does removing at most two elements leave a (nonempty) AP?
inline bool ap_plus_two(const Elems& a) {
  const std::size_t n = a.size();
  auto rest_is_ap = [&](std::size_t i, std::size_t j) {
    Elems r;
    for (std::size_t k = 0; k < n; ++k)
      if (k != i && k != j) r.push_back(a[k]);
    return !r.empty() && is_ap(r);
  };
  const std::size_t none = n;
  if (rest_is_ap(none, none)) return true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (rest_is_ap(i, j == i ? none : j)) return true;
  return false;
}

}  // namespace oracle
