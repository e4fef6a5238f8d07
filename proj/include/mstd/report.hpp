#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mstd/int_set.hpp"

namespace mstd {

struct GridParam {
  std::string name;
  Int value;
  friend bool operator==(const GridParam&, const GridParam&) = default;
};

struct Witness {
  IntSet set;
  std::string detail;
  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Outcome of one machine check over an explicit finite grid.
///
/// `violations` is empty exactly when the check passed. Witnesses go through
/// add_violation, which re-evaluates them before accepting.
struct VerificationReport {
  std::string check;
  std::vector<GridParam> grid;
  std::uint64_t cases = 0;
  std::vector<Witness> violations;
  std::int64_t elapsed_ms = 0;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> notes;

  bool passed() const noexcept { return violations.empty(); }

  /// `still_fails(set)` must confirm the violation independently of the
  /// code path that found it.
  template <class Recheck>
  void add_violation(IntSet set, std::string detail, Recheck&& still_fails) {
    if (!still_fails(set))
      throw std::logic_error("witness " + detail + " did not reproduce under re-check");
    violations.push_back({std::move(set), std::move(detail)});
  }

  /// Adds counts and appends violations; call in canonical grid order.
  void absorb(VerificationReport&& part);
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

/// One-line human summary: "PASS <check>: N cases, 0 violations (...)".
std::string summary_line(const VerificationReport& r);

}  // namespace mstd
