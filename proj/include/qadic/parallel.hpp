#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace qadic {

/// Worker count from QADIC_THREADS (0 or unset = hardware concurrency).
std::size_t worker_count();

/// Runs f(i) for i in [begin, end) across worker_count() threads. Each index
/// is independent; the first exception thrown is rethrown on the caller.
template <typename F>
void parallel_for(std::size_t begin, std::size_t end, F&& f) {
  if (end <= begin) return;
  const std::size_t workers = std::min(worker_count(), end - begin);
  if (workers <= 1) {
    for (std::size_t i = begin; i < end; ++i) f(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = begin + w; i < end; i += workers) {
          try {
            f(i);
          } catch (...) {
            const std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            return;
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace qadic
