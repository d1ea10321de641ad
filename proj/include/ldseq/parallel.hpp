#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace ldseq {

// Run body(begin, end) over a fixed contiguous partition of [0, n).
// The partition depends only on n and threads, and each index is touched
// by exactly one worker, so any per-index output array is filled
// identically for every worker count.  Reductions are left to the caller,
// who combines per-index results in index order.
template <class Body>
void parallel_chunks(std::size_t n, unsigned threads, Body&& body) {
  if (n == 0) return;
  if (threads <= 1 || n == 1) {
    body(std::size_t{0}, n);
    return;
  }
  unsigned workers = std::min<std::size_t>(threads, n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::size_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t begin = static_cast<std::size_t>(w) * chunk;
    std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&body, begin, end] { body(begin, end); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace ldseq
