#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace tilted_ising {

/// Runs fn(i) for i in [0, n) on a small worker pool. workers <= 0 selects
/// the hardware concurrency. Results must be written to disjoint slots; the
/// call returns after all indices are processed.
inline void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn) {
  if (n == 0) return;
  std::size_t nw = workers > 0 ? static_cast<std::size_t>(workers)
                               : std::max(1u, std::thread::hardware_concurrency());
  nw = std::min(nw, n);
  if (nw <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(nw);
  std::exception_ptr error;
  std::mutex error_mutex;
  for (std::size_t t = 0; t < nw; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace tilted_ising
