#include <stdexcept>

#include "mstd/kernel.hpp"
#include "mstd/literal.hpp"
#include "mstd/parallel.hpp"
#include "mstd/search.hpp"

namespace mstd {

namespace {

bool sum_dominant_by_materializing(const IntSet& s) {
  return sumset(s).size() > diffset(s).size();
}

bool sum_dominant(const IntSet& s) {
  const kernel::Counts c = kernel::counts(s);
  return c.sum_size > c.diff_size;
}

std::string ap_label(Int first, Int step, Int length) {
  return "AP(" + std::to_string(first) + "," + std::to_string(step) + "," +
         std::to_string(length) + ")";
}

}  // namespace

VerificationReport explore_two_ap_unions(int max_len, int max_step, int max_shift,
                                         unsigned workers) {
  if (max_len < 1 || max_step < 1 || max_shift < 1)
    throw std::domain_error("two-AP grid bounds must be at least 1");
  Stopwatch clock;
  const auto len = static_cast<std::size_t>(max_len);

  // One unit per (n1, n2); inside, d1 <= d2 and then the shift of the second AP.
  auto parts = parallel_map(len * len, workers, [&](std::size_t unit) {
    const Int n1 = static_cast<Int>(unit / len) + 1;
    const Int n2 = static_cast<Int>(unit % len) + 1;
    VerificationReport part;
    for (Int d1 = 1; d1 <= max_step; ++d1) {
      for (Int d2 = d1; d2 <= max_step; ++d2) {
        for (Int a2 = -max_shift; a2 <= max_shift; ++a2) {
          ++part.cases;
          const IntSet u = IntSet::progression(0, d1, n1).united(IntSet::progression(a2, d2, n2));
          if (!sum_dominant(u)) continue;
          part.add_violation(u, ap_label(0, d1, n1) + " u " + ap_label(a2, d2, n2),
                             sum_dominant_by_materializing);
        }
      }
    }
    return part;
  });

  VerificationReport report;
  report.check = "two-ap-unions";
  report.grid = {{"max_len", max_len}, {"max_step", max_step}, {"max_shift", max_shift}};
  for (auto& p : parts) report.absorb(std::move(p));
  report.notes.push_back("grid report only: no claim is made beyond the enumerated unions");
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

MinAdditionsResult explore_min_additions(const APSpec& ap, int k_max, Interval window,
                                         unsigned workers) {
  if (k_max < 1) throw std::domain_error("k_max must be at least 1");
  if (ap.length < 1 || ap.step < 1) throw std::domain_error("AP needs positive step and length");
  if (window.lo > window.hi) throw std::domain_error("empty window");
  Stopwatch clock;
  const IntSet base = ap.to_set();
  std::vector<Int> pool;
  for (Int x = window.lo; x <= window.hi; ++x)
    if (!base.contains(x)) pool.push_back(x);
  const std::size_t m = pool.size();

  MinAdditionsResult result;
  VerificationReport& report = result.report;
  report.check = "min-additions";
  report.grid = {{"ap_first", ap.first},     {"ap_step", ap.step}, {"ap_length", ap.length},
                 {"k_max", k_max},           {"window_lo", window.lo},
                 {"window_hi", window.hi}};

  struct UnitOutcome {
    std::uint64_t candidates = 0;
    std::optional<std::vector<Int>> first;
  };

  for (int k = 1; k <= k_max; ++k) {
    const auto kk = static_cast<std::size_t>(k);
    // Unit u fixes the smallest addition pool[u]; combinations inside a unit
    // are generated in lexicographic order.
    auto units = parallel_map(m, workers, [&](std::size_t u) {
      UnitOutcome out;
      if (u + kk > m) return out;
      std::vector<std::size_t> idx(kk);
      for (std::size_t i = 0; i < kk; ++i) idx[i] = u + i;
      while (true) {
        ++out.candidates;
        if (!out.first) {
          std::vector<Int> add;
          for (std::size_t i : idx) add.push_back(pool[i]);
          if (sum_dominant(base.united(IntSet(add)))) out.first = std::move(add);
        }
        std::size_t i = kk;
        while (i > 1 && idx[i - 1] == m - kk + i - 1) --i;
        if (i <= 1) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < kk; ++j) idx[j] = idx[j - 1] + 1;
      }
      return out;
    });

    AdditionOutcome outcome;
    outcome.k = k;
    for (const UnitOutcome& u : units) {
      outcome.candidates += u.candidates;
      if (!outcome.first_addition && u.first) {
        outcome.first_addition = IntSet(*u.first);
        outcome.first_superset = base.united(*outcome.first_addition);
      }
    }
    report.cases += outcome.candidates;
    if (outcome.first_superset) {
      report.notes.push_back("k=" + std::to_string(k) + ": sum-dominant superset " +
                             format_set(*outcome.first_superset) + " via additions " +
                             format_set(*outcome.first_addition));
      if (k <= 2)
        report.add_violation(*outcome.first_superset,
                             "AP plus " + std::to_string(k) + " additions is sum-dominant",
                             sum_dominant_by_materializing);
    } else {
      report.notes.push_back("k=" + std::to_string(k) + ": none among " +
                             std::to_string(outcome.candidates) + " candidates");
    }
    result.per_k.push_back(std::move(outcome));
  }
  report.elapsed_ms = clock.elapsed_ms();
  return result;
}

Json to_json(const MinAdditionsResult& r, bool with_timing) {
  Json j = to_json(r.report, with_timing);
  Json per = Json::array();
  for (const AdditionOutcome& o : r.per_k) {
    Json row;
    row["k"] = o.k;
    row["candidates"] = o.candidates;
    row["found"] = o.first_superset.has_value();
    row["first_addition"] = o.first_addition ? Json(format_set(*o.first_addition)) : Json(nullptr);
    row["first_superset"] = o.first_superset ? Json(format_set(*o.first_superset)) : Json(nullptr);
    per.push_back(std::move(row));
  }
  j["per_k"] = std::move(per);
  return j;
}

}  // namespace mstd
