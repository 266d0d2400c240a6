#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace echar::detail {

// Set on pool threads so nested calls run inline instead of oversubscribing.
inline thread_local bool in_worker = false;

// Runs fn(i) for i in [0, count) on a small worker pool. Results are written by
// index so ordering is deterministic; the first exception is rethrown.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn, unsigned max_workers = 0) {
  unsigned hw = max_workers ? max_workers : std::max(1U, std::thread::hardware_concurrency());
  const auto workers = static_cast<unsigned>(std::min<std::size_t>(hw, count));
  if (workers <= 1 || in_worker) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      in_worker = true;
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace echar::detail
