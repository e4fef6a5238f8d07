#include "mstd/structure.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "mstd/kernel.hpp"

namespace mstd {

namespace {

void require_pair(const IntSet& a) {
  if (a.size() < 2) throw std::domain_error("operation requires at least two elements");
}

// Sum of C(run, 2) over runs of equal values in a sorted vector.
std::uint64_t collision_pairs(std::vector<Int>& values) {
  std::sort(values.begin(), values.end());
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < values.size();) {
    std::size_t j = i;
    while (j < values.size() && values[j] == values[i]) ++j;
    const std::uint64_t run = j - i;
    total += run * (run - 1) / 2;
    i = j;
  }
  return total;
}

}  // namespace

GapVector gaps(const IntSet& a) {
  require_pair(a);
  GapVector g;
  g.gaps.reserve(a.size() - 1);
  for (std::size_t i = 0; i + 1 < a.size(); ++i) g.gaps.push_back(a[i + 1] - a[i]);
  return g;
}

DifferenceTable difference_table(const IntSet& a) {
  require_pair(a);
  DifferenceTable t;
  t.rows.reserve(a.size() - 1);
  for (std::size_t r = 0; r + 1 < a.size(); ++r) {
    std::vector<Int> row;
    row.reserve(a.size() - 1 - r);
    for (std::size_t j = r + 1; j < a.size(); ++j) row.push_back(a[j] - a[r]);
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string render_difference_table(const DifferenceTable& table) {
  std::size_t width = 1;
  for (const auto& row : table.rows)
    for (Int v : row) width = std::max(width, std::to_string(v).size());

  auto cell = [width](const std::string& s) {
    return std::string(width - s.size(), ' ') + s;
  };
  std::ostringstream out;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out << (r == 0 ? cell("0") : std::string(width, ' '));
    if (r > 0) out << std::string((r - 1) * (width + 1), ' ');
    for (Int v : table.rows[r]) out << ' ' << cell(std::to_string(v));
    out << '\n';
  }
  return out.str();
}

std::uint64_t equal_diff_pairs(const IntSet& a) {
  if (a.empty()) throw std::domain_error("operation requires a nonempty set");
  std::vector<Int> diffs;
  diffs.reserve(a.size() * (a.size() - 1) / 2);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) diffs.push_back(a[j] - a[i]);
  return collision_pairs(diffs);
}

std::uint64_t equal_sum_pairs(const IntSet& a) {
  if (a.empty()) throw std::domain_error("operation requires a nonempty set");
  std::vector<Int> sums;
  sums.reserve(a.size() * (a.size() + 1) / 2);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i; j < a.size(); ++j) sums.push_back(a[i] + a[j]);
  return collision_pairs(sums);
}

CardinalityBounds cardinality_bounds(std::int64_t n) {
  if (n < 1) throw std::domain_error("cardinality must be at least 1");
  const auto u = static_cast<std::uint64_t>(n);
  return {u * (u + 1) / 2, u * (u - 1) + 1};
}

DeltaProfile insertion_delta(const IntSet& a, Int x) {
  if (a.contains(x)) throw std::domain_error("inserted element already belongs to the set");
  const IntSet grown = a.with(x);
  if (a.empty()) {
    // Inserting into the empty set creates one sum and no positive difference.
    return {1, 0};
  }
  const kernel::Counts before = kernel::counts(a);
  const kernel::Counts after = kernel::counts(grown);
  return {after.sum_size - before.sum_size, (after.diff_size - before.diff_size) / 2};
}

}  // namespace mstd
