#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace pathmax {

/// Worker count: PATHMAX_JOBS when set and positive, else hardware concurrency.
int default_jobs();

/**
 * Runs fn(chunk) for every chunk in [0, chunks) on up to `jobs` threads.
 * Chunks are claimed dynamically; callers write into per-chunk slots and
 * reduce afterwards, so results never depend on the thread count. The first
 * exception thrown by any worker is rethrown on the calling thread.
 */
template <typename Fn>
void parallel_chunks(std::uint64_t chunks, int jobs, Fn&& fn) {
  if (jobs <= 1 || chunks <= 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) fn(c);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::uint64_t c = next.fetch_add(1);
      if (c >= chunks) return;
      try {
        fn(c);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(chunks);
        return;
      }
    }
  };
  const auto threads = static_cast<std::uint64_t>(jobs) < chunks ? static_cast<std::size_t>(jobs) : static_cast<std::size_t>(chunks);
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace pathmax
