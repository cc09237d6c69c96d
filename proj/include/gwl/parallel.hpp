#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace gwl {

/// Runs fn(begin, end) over a static partition of [0, count). Workers write
/// to disjoint, pre-sized slots only, so results do not depend on the
/// thread count.
template <typename Fn>
void parallel_chunks(size_t count, int threads, Fn&& fn) {
  if (threads <= 1 || count < 2) {
    fn(static_cast<size_t>(0), count);
    return;
  }
  const size_t workers = std::min<size_t>(static_cast<size_t>(threads), count);
  const size_t chunk = (count + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (size_t w = 0; w < workers; ++w) {
    const size_t begin = w * chunk;
    const size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace gwl
