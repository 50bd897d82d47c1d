#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace rotren {

// Runs fn(row) for every row in [0, n_rows), splitting the range into
// contiguous chunks, one per worker. Each row is touched by exactly one
// worker, so row-local writes need no synchronization and the result is
// independent of the thread count. threads <= 0 means "use all cores".
template <typename Fn>
void parallel_for_rows(int n_rows, int threads, Fn&& fn) {
  if (n_rows <= 0) return;
  if (threads <= 0) {
    unsigned hw = std::thread::hardware_concurrency();
    threads = hw == 0 ? 1 : static_cast<int>(hw);
  }
  threads = std::min(threads, n_rows);
  if (threads == 1) {
    for (int r = 0; r < n_rows; ++r) fn(r);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(threads));
  int base = n_rows / threads;
  int extra = n_rows % threads;
  int start = 0;
  for (int t = 0; t < threads; ++t) {
    int len = base + (t < extra ? 1 : 0);
    int lo = start, hi = start + len;
    start = hi;
    workers.emplace_back([lo, hi, &fn] {
      for (int r = lo; r < hi; ++r) fn(r);
    });
  }
  for (auto& w : workers) w.join();
}

}  // namespace rotren
