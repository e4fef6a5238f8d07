#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace mstd {

/// Worker count from MSTD_WORKERS, else 1.
inline unsigned default_workers() {
  if (const char* env = std::getenv("MSTD_WORKERS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

/// Evaluates fn(0..units-1) on up to `workers` threads and returns the
/// results indexed by unit, so the output never depends on scheduling.
/// `on_done(i, result)` runs serialized as each unit finishes.
/// The first exception (by unit index) is rethrown after all threads join.
template <class Fn, class Done>
auto parallel_map(std::size_t units, unsigned workers, Fn&& fn, Done&& on_done)
    -> std::vector<std::invoke_result_t<Fn&, std::size_t>> {
  using Result = std::invoke_result_t<Fn&, std::size_t>;
  std::vector<Result> results(units);
  std::vector<std::exception_ptr> errors(units);
  std::atomic<std::size_t> next{0};
  std::mutex done_mutex;

  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < units;) {
      try {
        results[i] = fn(i);
        std::lock_guard lock(done_mutex);
        on_done(i, results[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  const unsigned n = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(units)));
  if (n == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(work);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

template <class Fn>
auto parallel_map(std::size_t units, unsigned workers, Fn&& fn) {
  return parallel_map(units, workers, std::forward<Fn>(fn), [](std::size_t, const auto&) {});
}

}  // namespace mstd
