// Copyright (c) 2026 semilab developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace semilab {

/// Runs fn(i) for i in [0, count) across up to `workers` threads
/// (<= 0 selects the hardware default).  Each index must write only its own
/// output slot; under that discipline results are identical for any worker
/// count.  The first exception thrown by any fn is rethrown on the caller.
template <typename Fn>
void parallel_for_indexed(std::size_t count, int workers, Fn&& fn) {
  if (count == 0) return;

  std::size_t n_threads = workers > 0
                              ? static_cast<std::size_t>(workers)
                              : static_cast<std::size_t>(std::thread::hardware_concurrency());
  if (n_threads == 0) n_threads = 1;
  if (n_threads > count) n_threads = count;

  if (n_threads == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(n_threads);
  for (std::size_t k = 0; k < n_threads; ++k) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();

  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace semilab
