#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace annuli {

// Fans f(i) out over a worker pool for i in [0, n). Exceptions from workers
// are rethrown on the calling thread (first one wins).
inline void parallel_for(int n, const std::function<void(int)>& f, int threads = 0) {
  if (n <= 0) return;
  unsigned hw = std::thread::hardware_concurrency();
  int nt = threads > 0 ? threads : static_cast<int>(hw ? std::min(hw, 8u) : 4u);
  nt = std::min(nt, n);
  if (nt <= 1) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr err;
  std::atomic<bool> has_err{false};
  std::vector<std::thread> pool;
  pool.reserve(nt);
  for (int t = 0; t < nt; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= n || has_err.load()) return;
        try {
          f(i);
        } catch (...) {
          if (!has_err.exchange(true)) err = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (has_err.load()) std::rethrow_exception(err);
}

}  // namespace annuli
