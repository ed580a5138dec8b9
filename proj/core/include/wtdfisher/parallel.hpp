#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace wtdfisher {

/// Number of worker threads to use: `requested` if positive, otherwise the
/// hardware concurrency (at least 1).
inline int resolve_jobs(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs fn(i) for i in [0, n) on up to `jobs` threads. Work items must be
/// independent; results should be written to pre-sized slots indexed by i so
/// that output ordering does not depend on scheduling. The first exception
/// thrown by any item is rethrown after all threads join.
inline void parallel_for_indexed(std::size_t n, int jobs,
                                 const std::function<void(std::size_t)>& fn) {
  jobs = resolve_jobs(jobs);
  if (n == 0) return;
  if (jobs == 1 || n == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::atomic<bool> failed{false};
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= n || failed.load()) return;
      try {
        fn(i);
      } catch (...) {
        if (!failed.exchange(true)) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  std::size_t n_threads = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
  pool.reserve(n_threads);
  for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace wtdfisher
