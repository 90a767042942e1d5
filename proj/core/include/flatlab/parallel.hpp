#pragma once

#include <functional>
#include <thread>
#include <vector>

namespace flatlab {

// Runs fn(i) for i in [0, n) across workers threads (0 = hardware default).
// Results must be written to preallocated per-index slots so the outcome is
// deterministic regardless of scheduling.
inline void parallel_for(int n, int workers, const std::function<void(int)>& fn) {
  if (workers <= 0) workers = (int)std::thread::hardware_concurrency();
  if (workers <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  workers = std::min(workers, n);
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (int i = w; i < n; i += workers) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace flatlab
