#include "mstd/verify.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "mstd/enumerate.hpp"
#include "mstd/kernel.hpp"
#include "mstd/literal.hpp"
#include "mstd/parallel.hpp"
#include "mstd/setcore.hpp"
#include "mstd/structure.hpp"

namespace mstd {

namespace {

// Re-checks go through materialized sumsets, not the counting kernel.
bool materialized_sum_dominant(const IntSet& s) { return sumset(s).size() > diffset(s).size(); }
bool materialized_balanced(const IntSet& s) { return sumset(s).size() == diffset(s).size(); }

bool sum_dominant(const IntSet& s) {
  const kernel::Counts c = kernel::counts(s);
  return c.sum_size > c.diff_size;
}

Int lcm_up_to(int q_max) {
  Int l = 1;
  for (Int q = 2; q <= q_max; ++q) l = std::lcm(l, q);
  return l;
}

// Numerators t (over common denominator l) of every rational in [lo, hi]
// whose reduced denominator is at most q_max.
std::vector<Int> rational_grid(Interval w, Int l, int q_max) {
  std::vector<Int> out;
  for (Int t = w.lo * l; t <= w.hi * l; ++t)
    if (l / std::gcd(t, l) <= q_max) out.push_back(t);
  return out;
}

std::string rational_text(Int t, Int l) {
  return format_set(RationalSet(IntSet{t}, l));
}

std::string union_label(Int n, const std::string& extras) {
  return "I_" + std::to_string(n) + " u {" + extras + "}";
}

void require(bool ok, const char* what) {
  if (!ok) throw std::domain_error(what);
}

// --- shared corpus -----------------------------------------------------------

constexpr std::uint64_t kCorpusChunk = 4096;

template <class Check>
VerificationReport run_corpus(std::uint64_t trials, std::uint64_t seed, unsigned workers,
                              Check&& check) {
  const std::size_t exhaustive_units = kCorpusExhaustiveDiameter + 1;
  const std::size_t random_units = (trials + kCorpusChunk - 1) / kCorpusChunk;
  auto parts = parallel_map(exhaustive_units + random_units, workers, [&](std::size_t unit) {
    VerificationReport part;
    if (unit < exhaustive_units) {
      const int d = static_cast<int>(unit);
      const Partition whole{0, d, 0, 0};
      walk_partition(whole, SizeBounds{}, [&](std::uint64_t mask, int) {
        ++part.cases;
        check(IntSet::from_mask(mask), part);
      });
    } else {
      const std::uint64_t chunk = unit - exhaustive_units;
      const std::uint64_t begin = chunk * kCorpusChunk;
      const std::uint64_t end = std::min(trials, begin + kCorpusChunk);
      Rng rng(mix_seed(seed, chunk));
      for (std::uint64_t i = begin; i < end; ++i) {
        ++part.cases;
        check(rng.random_set(kCorpusRandomMaxSize, 0, kCorpusRandomWindow), part);
      }
    }
    return part;
  });
  VerificationReport report;
  for (auto& p : parts) report.absorb(std::move(p));
  report.seed = seed;
  report.grid = {{"exhaustive_max_diameter", kCorpusExhaustiveDiameter},
                 {"random_trials", static_cast<Int>(trials)},
                 {"random_max_size", kCorpusRandomMaxSize},
                 {"random_window_hi", kCorpusRandomWindow}};
  return report;
}

template <class Visit>
void for_each_combination(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    if (r > UINT64_MAX / (n - k + i)) return UINT64_MAX;
    r = r * (n - k + i) / i;
  }
  return r;
}

IntSet pick(const std::vector<Int>& terms, const std::vector<std::size_t>& idx) {
  std::vector<Int> v;
  v.reserve(idx.size());
  for (std::size_t i : idx) v.push_back(terms[i]);
  return IntSet(std::move(v));
}

}  // namespace

// --- cardinality < 6 and friends --------------------------------------------

VerificationReport verify_small_cardinality(int max_size, int max_diameter, unsigned workers) {
  require(max_size >= 1, "max_size must be at least 1");
  require(max_diameter >= 0 && max_diameter <= kMaxEnumerationDiameter,
          "max_diameter must lie in [0, 63]");
  Stopwatch clock;
  const std::vector<Partition> parts = make_partitions(0, max_diameter);
  const SizeBounds bounds{1, max_size};
  auto results = parallel_map(parts.size(), workers, [&](std::size_t i) {
    VerificationReport part;
    walk_partition(parts[i], bounds, [&](std::uint64_t mask, int) {
      if (!is_canonical_mask(mask, parts[i].diameter)) return;
      ++part.cases;
      const kernel::Counts c = kernel::mask_counts(mask);
      if (c.sum_size > c.diff_size)
        part.add_violation(IntSet::from_mask(mask), "sum-dominant", materialized_sum_dominant);
    });
    return part;
  });
  VerificationReport report;
  report.check = "small-cardinality";
  report.grid = {{"max_size", max_size}, {"max_diameter", max_diameter}};
  for (auto& r : results) report.absorb(std::move(r));
  report.notes.push_back("canonical sets only: min 0, gap gcd 1, lexicographically <= reflection");
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

// --- arithmetic progression plus two -------------------------------------------

VerificationReport verify_ap_plus_two(int n_max, const ParameterWindow& window, int q_max,
                                      unsigned workers) {
  require(n_max >= 1, "n_max must be at least 1");
  require(q_max >= 1, "q_max must be at least 1");
  Stopwatch clock;
  const Int l = lcm_up_to(q_max);

  struct Unit {
    VerificationReport report;
    std::uint64_t mixed = 0;  // exactly one of x + y, x - y integral
  };
  auto units = parallel_map(static_cast<std::size_t>(n_max), workers, [&](std::size_t u) {
    const Int n = static_cast<Int>(u) + 1;
    const Interval w = window.for_n(n);
    const std::vector<Int> grid = rational_grid(w, l, q_max);
    const IntSet base = IntSet::range(n).scaled(l);
    Unit out;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      for (std::size_t j = i; j < grid.size(); ++j) {
        const Int x = grid[i];
        const Int y = grid[j];
        ++out.report.cases;
        if (((x + y) % l == 0) != ((x - y) % l == 0)) ++out.mixed;
        const IntSet s = base.with(x).with(y);
        if (sum_dominant(s))
          out.report.add_violation(
              s, union_label(n, rational_text(x, l) + "," + rational_text(y, l)) + " scaled by " +
                     std::to_string(l),
              materialized_sum_dominant);
      }
    }
    return out;
  });

  VerificationReport report;
  report.check = "ap-plus-two";
  report.grid = {{"n_max", n_max}, {"q_max", q_max}};
  if (window.fixed) {
    report.grid.push_back({"window_lo", window.fixed->lo});
    report.grid.push_back({"window_hi", window.fixed->hi});
  } else {
    report.grid.push_back({"window_lo_per_n", window.lo_per_n});
    report.grid.push_back({"window_hi_per_n", window.hi_per_n});
  }
  std::uint64_t mixed = 0;
  for (auto& u : units) {
    mixed += u.mixed;
    report.absorb(std::move(u.report));
  }
  report.notes.push_back("pairs with x = y (single insertion) are included");
  report.notes.push_back("pairs with exactly one of x+y, x-y integral: " + std::to_string(mixed));
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

VerificationReport verify_ap_plus_two_points(int n, const RationalSet& points) {
  require(n >= 1, "n must be at least 1");
  require(points.size() >= 1 && points.size() <= 2, "expected one or two points");
  Stopwatch clock;
  const RationalSet all = RationalSet::integral(IntSet::range(n)).united(points);
  const ScaledSet scaled = scale_to_integers(all);
  VerificationReport report;
  report.check = "ap-plus-two";
  report.grid = {{"n", n}};
  report.cases = 1;
  if (sum_dominant(scaled.set))
    report.add_violation(scaled.set, union_label(n, format_set(points)),
                         materialized_sum_dominant);
  report.notes.push_back("scaled by " + std::to_string(scaled.scale) + ": " +
                         std::string(to_string(classify(scaled.set))));
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

// --- one insertion off the half-integers ---------------------------------------

namespace {

// x = t / l. Returns the reason x is outside the statement, if any.
std::optional<std::string> remark_exclusion(Int n, Int t, Int l) {
  if ((2 * t - l) % (2 * l) == 0) return "x - 1/2 is an integer";
  if (t == -l || t == n * l) return "x is -1 or n";
  if (t % l == 0 && t >= 0 && t / l <= n - 1) return "x already lies in I_n";
  return std::nullopt;
}

bool remark_holds(const IntSet& s) { return diffset(s).size() >= sumset(s).size() + 1; }

}  // namespace

VerificationReport verify_remark_half(int n_max, const ParameterWindow& window, int q_max,
                                      unsigned workers) {
  require(n_max >= 2, "n_max must be at least 2");
  require(q_max >= 1, "q_max must be at least 1");
  Stopwatch clock;
  const Int l = lcm_up_to(q_max);
  struct Unit {
    VerificationReport report;
    std::uint64_t excluded = 0;
  };
  auto units = parallel_map(static_cast<std::size_t>(n_max - 1), workers, [&](std::size_t u) {
    const Int n = static_cast<Int>(u) + 2;
    const IntSet base = IntSet::range(n).scaled(l);
    Unit out;
    for (Int t : rational_grid(window.for_n(n), l, q_max)) {
      if (remark_exclusion(n, t, l)) {
        ++out.excluded;
        continue;
      }
      ++out.report.cases;
      const IntSet s = base.with(t);
      const kernel::Counts c = kernel::counts(s);
      if (c.diff_size < c.sum_size + 1)
        out.report.add_violation(s, union_label(n, rational_text(t, l)) + " scaled by " +
                                        std::to_string(l),
                                 [](const IntSet& w) { return !remark_holds(w); });
    }
    return out;
  });
  VerificationReport report;
  report.check = "insertion-excess";
  report.grid = {{"n_max", n_max}, {"q_max", q_max}};
  if (window.fixed) {
    report.grid.push_back({"window_lo", window.fixed->lo});
    report.grid.push_back({"window_hi", window.fixed->hi});
  } else {
    report.grid.push_back({"window_lo_per_n", window.lo_per_n});
    report.grid.push_back({"window_hi_per_n", window.hi_per_n});
  }
  std::uint64_t excluded = 0;
  for (auto& u : units) {
    excluded += u.excluded;
    report.absorb(std::move(u.report));
  }
  report.notes.push_back("grid points excluded (half-integer, -1, n, or already in I_n): " +
                         std::to_string(excluded));
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

VerificationReport verify_remark_half_points(int n, const RationalSet& points) {
  require(n >= 2, "n must be at least 2");
  Stopwatch clock;
  VerificationReport report;
  report.check = "insertion-excess";
  report.grid = {{"n", n}};
  const Int l = points.denominator();
  const IntSet base = IntSet::range(n).scaled(l);
  for (Int t : points.numerators()) {
    const std::string label = rational_text(t, l);
    if (auto why = remark_exclusion(n, t, l)) {
      report.notes.push_back("x=" + label + " excluded: " + *why);
      continue;
    }
    ++report.cases;
    const IntSet s = base.with(t);
    const kernel::Counts c = kernel::counts(s);
    report.notes.push_back("x=" + label + ": diff_size - sum_size = " +
                           std::to_string(static_cast<Int>(c.diff_size) -
                                          static_cast<Int>(c.sum_size)));
    if (c.diff_size < c.sum_size + 1)
      report.add_violation(s, union_label(n, label), [](const IntSet& w) { return !remark_holds(w); });
  }
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

// --- insertion just past an interval ---------------------------------------------

VerificationReport verify_proposition2(int n_max) {
  require(n_max >= 2, "n_max must be at least 2");
  Stopwatch clock;
  VerificationReport report;
  report.check = "insertion-delta";
  report.grid = {{"n_max", n_max}};
  for (Int n = 2; n <= n_max; ++n) {
    const IntSet base = IntSet::range(n);
    for (Int k = 1; k <= n - 1; ++k) {
      ++report.cases;
      const Int x = n - 1 + k;
      const DeltaProfile got = insertion_delta(base, x);
      const DeltaProfile want{static_cast<std::size_t>(k + 1), static_cast<std::size_t>(k)};
      if (got == want) continue;
      report.add_violation(
          base.with(x),
          "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": got (" +
              std::to_string(got.new_sums) + "," + std::to_string(got.new_pos_diffs) + ")",
          [&](const IntSet& grown) {
            const std::size_t sums = sumset(grown).size() - sumset(base).size();
            const std::size_t diffs = (diffset(grown).size() - diffset(base).size()) / 2;
            return DeltaProfile{sums, diffs} != want;
          });
    }
  }
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

// --- collision counts and bounds -------------------------------------------------

VerificationReport verify_observation6(std::uint64_t trials, std::uint64_t seed,
                                       unsigned workers) {
  require(trials >= 1, "trials must be at least 1");
  Stopwatch clock;
  auto fails = [](const IntSet& a) { return 2 * equal_sum_pairs(a) < equal_diff_pairs(a); };
  VerificationReport report = run_corpus(trials, seed, workers, [&](const IntSet& a, auto& part) {
    if (fails(a))
      part.add_violation(a,
                         "equal_sum_pairs=" + std::to_string(equal_sum_pairs(a)) +
                             " equal_diff_pairs=" + std::to_string(equal_diff_pairs(a)),
                         fails);
  });
  report.check = "pair-counts";
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

namespace {

std::optional<std::string> bound_failure(const IntSet& a) {
  const CardinalityBounds b = cardinality_bounds(static_cast<std::int64_t>(a.size()));
  const std::uint64_t sums = sumset(a).size();
  const std::uint64_t diffs = diffset(a).size();
  const std::uint64_t esp = equal_sum_pairs(a);
  const std::uint64_t edp = equal_diff_pairs(a);
  if (sums > b.max_sum) return "sum_size above n(n+1)/2";
  if (diffs > b.max_diff) return "diff_size above n(n-1)+1";
  if (sums + esp < b.max_sum) return "sum_size below n(n+1)/2 - equal_sum_pairs";
  if (diffs + 2 * edp < b.max_diff) return "diff_size below n(n-1)+1 - 2*equal_diff_pairs";
  if (esp == 0 && (sums != b.max_sum || diffs != b.max_diff)) return "Sidon set misses equality";
  return std::nullopt;
}

}  // namespace

VerificationReport verify_cardinality_bounds(std::uint64_t trials, std::uint64_t seed,
                                             unsigned workers) {
  require(trials >= 1, "trials must be at least 1");
  Stopwatch clock;
  auto fails = [](const IntSet& a) { return bound_failure(a).has_value(); };
  VerificationReport report = run_corpus(trials, seed, workers, [&](const IntSet& a, auto& part) {
    if (auto why = bound_failure(a)) part.add_violation(a, *why, fails);
  });
  report.check = "cardinality-bounds";

  // Sidon fixture: both bounds attained exactly.
  const IntSet sidon{0, 1, 3, 7};
  ++report.cases;
  const kernel::Counts c = kernel::counts(sidon);
  const CardinalityBounds b = cardinality_bounds(4);
  if (c.sum_size != b.max_sum || c.diff_size != b.max_diff)
    report.add_violation(sidon, "Sidon fixture misses equality", [&](const IntSet& s) {
      return sumset(s).size() != b.max_sum || diffset(s).size() != b.max_diff;
    });
  report.notes.push_back("Sidon fixture 0,1,3,7: " + std::to_string(c.sum_size) + " sums, " +
                         std::to_string(c.diff_size) + " differences");
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

// --- symmetric sets ----------------------------------------------------------------

VerificationReport verify_symmetric_balanced(int max_diameter) {
  require(max_diameter >= 0 && max_diameter <= 60, "max_diameter must lie in [0, 60]");
  Stopwatch clock;
  VerificationReport report;
  report.check = "symmetric-balanced";
  report.grid = {{"max_diameter", max_diameter}};
  for (Int d = 0; d <= max_diameter; ++d) {
    // Free choices: positions 1..half mirrored to d-i, plus the centre for even d.
    const Int half = d >= 1 ? (d - 1) / 2 : 0;
    const bool has_center = d >= 2 && d % 2 == 0;
    const std::uint64_t choices = std::uint64_t{1} << (half + (has_center ? 1 : 0));
    for (std::uint64_t c = 0; c < choices; ++c) {
      std::vector<Int> v{0, d};
      for (Int i = 1; i <= half; ++i) {
        if ((c >> (i - 1)) & 1U) {
          v.push_back(i);
          v.push_back(d - i);
        }
      }
      if (has_center && ((c >> half) & 1U)) v.push_back(d / 2);
      const IntSet s(std::move(v));
      ++report.cases;
      if (!is_symmetric(s))
        throw std::logic_error("mirrored set " + format_set(s) + " is not symmetric");
      if (classify(s) != SetClass::Balanced)
        report.add_violation(s, "symmetric but not balanced",
                             [](const IntSet& w) { return !materialized_balanced(w); });
    }
  }
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

// --- growth sequences --------------------------------------------------------------

bool check_growth_condition(std::span<const Int> terms, Int r) {
  if (r < 1) throw std::domain_error("r must be positive");
  for (std::size_t k = static_cast<std::size_t>(r); k < terms.size(); ++k)
    if (terms[k] <= terms[k - 1] + terms[k - static_cast<std::size_t>(r)]) return false;
  return true;
}

GrowthSequence::GrowthSequence(std::vector<Int> terms, Int r) : terms_(std::move(terms)), r_(r) {
  if (r_ < 1) throw std::domain_error("r must be positive");
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i] < 0) throw std::domain_error("growth sequence terms must be nonnegative");
    if (i > 0 && terms_[i] <= terms_[i - 1])
      throw std::domain_error("growth sequence terms must be strictly increasing");
  }
  if (!check_growth_condition(terms_, r_))
    throw std::domain_error("terms violate a_k > a_{k-1} + a_{k-r}");
}

GrowthSequence GrowthSequence::fibonacci(std::size_t count) {
  std::vector<Int> t;
  for (std::size_t i = 0; i < count; ++i) {
    if (i < 3) t.push_back(static_cast<Int>(i));
    else t.push_back(t[i - 1] + t[i - 2]);
  }
  return GrowthSequence(std::move(t), 3);
}

GrowthSequence GrowthSequence::geometric(Int num, Int den, std::size_t count, Int r) {
  if (num <= den || den < 1) throw std::domain_error("ratio must exceed 1");
  std::vector<Int> t;
  for (std::size_t k = 0; k < count; ++k) {
    Int v = 1;
    for (std::size_t i = 0; i < count - 1; ++i) {
      if (__builtin_mul_overflow(v, i < k ? num : den, &v))
        throw std::domain_error("geometric terms overflow 64-bit integers");
    }
    t.push_back(v);
  }
  return GrowthSequence(std::move(t), r);
}

VerificationReport verify_growth_criterion(const GrowthSequence& seq,
                                           const GrowthCriterionParams& p,
                                           std::uint64_t subset_budget, std::uint64_t seed,
                                           std::uint64_t tuple_samples) {
  if (p.r != seq.r()) throw std::domain_error("parameter r differs from the sequence's r");
  require(p.n >= 0 && p.ell >= 0 && p.m >= 0, "n, ell and m must be nonnegative");
  require(p.window.lo <= p.window.hi, "empty window");
  const std::vector<Int>& terms = seq.terms();
  const auto size = static_cast<std::size_t>(p.subset_size());
  if (size > terms.size())
    throw std::domain_error("need " + std::to_string(size) + " terms, sequence has " +
                            std::to_string(terms.size()));
  if (!p.admissible())
    throw std::domain_error("inadmissible parameters: m|S| + m(m+1)/2 = " +
                            std::to_string(p.new_sum_budget()) + " exceeds l(n+1) = " +
                            std::to_string(p.guaranteed_deficit()));

  Stopwatch clock;
  VerificationReport report;
  report.check = "growth-criterion";
  report.seed = seed;
  report.grid = {{"r", p.r},
                 {"n", p.n},
                 {"ell", p.ell},
                 {"m", p.m},
                 {"window_lo", p.window.lo},
                 {"window_hi", p.window.hi},
                 {"terms", static_cast<Int>(terms.size())},
                 {"subset_budget", static_cast<Int>(subset_budget)}};

  // Hypothesis: no sum-dominant subset of size <= 2r + n among the terms.
  const std::size_t small = std::min(terms.size(), static_cast<std::size_t>(2 * p.r + p.n));
  std::uint64_t hypothesis_cases = 0;
  for (std::size_t k = 1; k <= small; ++k) hypothesis_cases += binomial(terms.size(), k);
  if (hypothesis_cases > 50'000'000)
    throw std::domain_error("too many subsets to confirm the no-small-sum-dominant hypothesis");
  for (std::size_t k = 1; k <= small; ++k) {
    for_each_combination(terms.size(), k, [&](const std::vector<std::size_t>& idx) {
      const IntSet s = pick(terms, idx);
      if (sum_dominant(s))
        throw std::domain_error("hypothesis fails: sum-dominant subset " + format_set(s));
    });
  }
  report.notes.push_back("hypothesis confirmed on " + std::to_string(hypothesis_cases) +
                         " subsets of size <= 2r+n");

  // Subsets S of size 2r + n + ell.
  std::vector<IntSet> subsets;
  {
    std::vector<std::size_t> prefix(size);
    std::iota(prefix.begin(), prefix.end(), std::size_t{0});
    subsets.push_back(pick(terms, prefix));
    const std::uint64_t total = binomial(terms.size(), size);
    if (subset_budget > 0 && total - 1 <= subset_budget) {
      for_each_combination(terms.size(), size, [&](const std::vector<std::size_t>& idx) {
        if (idx != prefix) subsets.push_back(pick(terms, idx));
      });
    } else if (subset_budget > 0) {
      Rng rng(seed);
      std::set<std::vector<std::size_t>> seen{prefix};
      while (subsets.size() < subset_budget + 1) {
        std::vector<std::size_t> all(terms.size());
        std::iota(all.begin(), all.end(), std::size_t{0});
        for (std::size_t i = 0; i < size; ++i)
          std::swap(all[i], all[static_cast<std::size_t>(rng.uniform(
                                static_cast<Int>(i), static_cast<Int>(all.size() - 1)))]);
        std::vector<std::size_t> idx(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(size));
        std::sort(idx.begin(), idx.end());
        if (seen.insert(idx).second) subsets.push_back(pick(terms, idx));
      }
    }
  }

  const Int want = p.guaranteed_deficit();
  Int min_deficit = INT64_MAX;
  std::uint64_t equal_count = 0;
  auto deficit_of = [](const IntSet& s) {
    return static_cast<Int>(diffset(s).size()) - static_cast<Int>(sumset(s).size());
  };
  for (std::size_t si = 0; si < subsets.size(); ++si) {
    const IntSet& s = subsets[si];
    ++report.cases;
    const kernel::Counts c = kernel::counts(s);
    const Int deficit = static_cast<Int>(c.diff_size) - static_cast<Int>(c.sum_size);
    min_deficit = std::min(min_deficit, deficit);
    if (deficit == want) ++equal_count;
    if (deficit < want)
      report.add_violation(s, "deficit " + std::to_string(deficit) + " below l(n+1) = " +
                                  std::to_string(want),
                           [&](const IntSet& w) { return deficit_of(w) < want; });

    if (p.m == 1) {
      for (Int b = p.window.lo; b <= p.window.hi; ++b) {
        ++report.cases;
        const IntSet star = s.with(b);
        if (sum_dominant(star))
          report.add_violation(star, "S u {" + std::to_string(b) + "} is sum-dominant",
                               materialized_sum_dominant);
      }
    } else if (p.m >= 2) {
      Rng rng(mix_seed(seed, si + 1));
      for (std::uint64_t t = 0; t < tuple_samples; ++t) {
        ++report.cases;
        IntSet star = s;
        std::string added;
        for (Int i = 0; i < p.m; ++i) {
          const Int b = rng.uniform(p.window.lo, p.window.hi);
          star = star.with(b);
          added += (i ? "," : "") + std::to_string(b);
        }
        if (sum_dominant(star))
          report.add_violation(star, "S u {" + added + "} is sum-dominant",
                               materialized_sum_dominant);
      }
    }
  }

  report.notes.push_back("admissibility m|S|+m(m+1)/2 = " + std::to_string(p.new_sum_budget()) +
                         " <= l(n+1) = " + std::to_string(want) + " holds; strict form " +
                         (p.strictly_admissible() ? "holds" : "fails"));
  report.notes.push_back("minimum deficit |S-S|-|S+S| observed: " + std::to_string(min_deficit) +
                         "; equal to l(n+1) in " + std::to_string(equal_count) + " of " +
                         std::to_string(subsets.size()) + " subsets");
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

// --- the two five-element sets ------------------------------------------------------

VerificationReport verify_five_element_witnesses() {
  Stopwatch clock;
  VerificationReport report;
  report.check = "five-element-witnesses";
  const std::vector<std::pair<IntSet, std::size_t>> fixtures = {
      {IntSet{0, 1, 3, 4, 5}, 11}, {IntSet{0, 1, 2, 4, 5}, 11}, {IntSet::range(5), 9}};
  for (const auto& [s, expected] : fixtures) {
    ++report.cases;
    const SetProfile prof = profile(s);
    auto off = [expected = expected](const IntSet& w) {
      return sumset(w).size() != expected || diffset(w).size() != expected;
    };
    if (prof.set_class != SetClass::Balanced || prof.sum_size != expected ||
        prof.diff_size != expected)
      report.add_violation(s, "expected balanced with " + std::to_string(expected) + " = " +
                                  std::to_string(expected),
                           off);
    report.notes.push_back(format_set(s) + ": " + std::to_string(prof.sum_size) + " sums, " +
                           std::to_string(prof.diff_size) + " differences");
  }
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

}  // namespace mstd
