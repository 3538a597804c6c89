#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace wordmap {

// Splits [0, n) into contiguous chunks and runs fn(begin, end) on each.
// Callers must write results into index-addressed slots (or fold with a
// commutative, associative merge) so the outcome is independent of the
// worker count and the chunk boundaries.
inline void parallel_chunks(std::size_t n, unsigned workers,
                            const std::function<void(std::size_t, std::size_t)>& fn) {
  if (n == 0) return;
  std::size_t t = std::max(1u, workers);
  t = std::min(t, n);
  if (t == 1) {
    fn(0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(t);
  std::size_t chunk = (n + t - 1) / t;
  for (std::size_t i = 0; i < t; ++i) {
    std::size_t b = std::min(n, i * chunk);
    std::size_t e = std::min(n, b + chunk);
    if (b >= e) break;
    pool.emplace_back(fn, b, e);
  }
  for (auto& th : pool) th.join();
}

}  // namespace wordmap
