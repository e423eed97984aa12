#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace degseq {

/// Evaluates fn(0..count-1) on up to `workers` threads. Results land at
/// their own index, so the output never depends on the worker count. The
/// first exception thrown by any task is rethrown after all workers join.
template <class Result, class Fn>
std::vector<Result> parallel_map(std::size_t count, unsigned workers, Fn&& fn) {
  std::vector<Result> results(count);
  const unsigned threads =
      static_cast<unsigned>(std::min<std::size_t>(std::max(1U, workers), std::max<std::size_t>(count, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto drain = [&] {
    while (!failed.load(std::memory_order_relaxed)) {
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) return;
      try {
        results[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(threads - 1);
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(drain);
  drain();
  for (std::thread& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return results;
}

/// Worker count from DEGSEQ_WORKERS, else the hardware concurrency (at
/// least 1).
unsigned default_worker_count();

}  // namespace degseq
