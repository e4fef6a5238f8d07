#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mstd/enumerate.hpp"
#include "mstd/json_io.hpp"
#include "mstd/report.hpp"
#include "mstd/setcore.hpp"

namespace mstd {

struct SearchConfig {
  int diameter_min = 0;
  int diameter_max = 24;
  std::optional<int> size_min;
  std::optional<int> size_max;
  bool prune_ap_plus_two = false;
  bool prune_symmetric = false;
  unsigned workers = 1;
  std::optional<std::string> checkpoint_path;

  /// Discovery sweeps skip sets that can never be sum-dominant.
  static SearchConfig discovery() {
    SearchConfig c;
    c.prune_ap_plus_two = true;
    c.prune_symmetric = true;
    return c;
  }

  SizeBounds size_bounds() const;
  /// Throws std::domain_error on an inconsistent configuration.
  void validate() const;
};

/// A canonical class representative handed to enumeration visitors.
struct CanonicalSet {
  std::uint64_t mask = 0;
  int diameter = 0;
  int size = 0;
  IntSet to_set() const { return IntSet::from_mask(mask); }
};

struct EnumerationCounts {
  std::uint64_t raw = 0;      // subsets of [0, D] holding 0 and D, within size bounds
  std::uint64_t visited = 0;  // canonical representatives
};

struct DiameterTally {
  int diameter = 0;
  std::uint64_t raw = 0;
  std::uint64_t examined = 0;
  std::uint64_t pruned = 0;
  std::uint64_t sum_dominant = 0;
  friend bool operator==(const DiameterTally&, const DiameterTally&) = default;
};

struct SearchResult {
  SearchConfig config;
  std::optional<int> min_mstd_size;
  std::vector<IntSet> witnesses;  // canonical, lexicographically sorted
  std::vector<SetProfile> witness_profiles;
  std::uint64_t sets_examined = 0;
  std::uint64_t sets_pruned = 0;
  std::vector<DiameterTally> per_diameter;
  std::uint64_t partitions_resumed = 0;  // loaded from a checkpoint
};

/// Visits each class exactly once, by diameter and then lexicographically.
/// Pruning flags in `config` are ignored here.
EnumerationCounts enumerate_normalized(const SearchConfig& config,
                                       const std::function<void(const CanonicalSet&)>& visitor);

/// Smallest sum-dominant cardinality in the configured space, with every
/// canonical witness of that cardinality.
SearchResult find_min_mstd(const SearchConfig& config);

Json to_json(const SearchResult& r);

// Open-question explorers.

/// AP(0, d1, n1) u AP(a2, d2, n2) over n1, n2 <= max_len, d1 <= d2 <= max_step,
/// |a2| <= max_shift; any sum-dominant union is a counterexample.
VerificationReport explore_two_ap_unions(int max_len, int max_step, int max_shift,
                                         unsigned workers = 1);

struct AdditionOutcome {
  int k = 0;
  std::uint64_t candidates = 0;
  std::optional<IntSet> first_addition;  // lexicographically first
  std::optional<IntSet> first_superset;
};

struct MinAdditionsResult {
  VerificationReport report;  // violations: sum-dominant supersets with k <= 2
  std::vector<AdditionOutcome> per_k;
};

/// For k = 1..k_max, tries every k-subset of window \ AP as additions.
MinAdditionsResult explore_min_additions(const APSpec& ap, int k_max, Interval window,
                                         unsigned workers = 1);

Json to_json(const MinAdditionsResult& r, bool with_timing = true);

}  // namespace mstd
