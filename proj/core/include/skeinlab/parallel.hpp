#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace skeinlab {

/// Worker count for jobs <= 0: the hardware concurrency, at least 1.
inline int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

/// Calls f(i) for 0 <= i < count on up to `jobs` threads. The first exception
/// thrown by any call is rethrown after all workers stop.
template <class F>
void parallel_for(int count, int jobs, F&& f) {
  const int workers = std::min(resolve_jobs(jobs), count);
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        while (!failed.load()) {
          const int i = next.fetch_add(1);
          if (i >= count) return;
          try {
            f(i);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            failed.store(true);
          }
        }
      });
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace skeinlab
