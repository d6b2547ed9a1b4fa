#ifndef HSRG_PARALLEL_HPP
#define HSRG_PARALLEL_HPP

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hsrg {

/// Runs fn(begin, end) over [0, n) split into at most `jobs` contiguous chunks.
/// The first exception thrown by a worker is rethrown on the caller.
template <typename Fn>
void parallel_for(int jobs, int n, Fn&& fn) {
  jobs = std::clamp(jobs, 1, std::max(1, n));
  if (jobs == 1) {
    fn(0, n);
    return;
  }
  std::vector<std::thread> workers;
  std::exception_ptr error;
  std::mutex error_mutex;
  const int chunk = (n + jobs - 1) / jobs;
  for (int j = 0; j < jobs; ++j) {
    const int lo = j * chunk;
    const int hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    workers.emplace_back([&, lo, hi] {
      try {
        fn(lo, hi);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace hsrg

#endif  // HSRG_PARALLEL_HPP
