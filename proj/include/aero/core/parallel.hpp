// Copyright Contributors to the AeroSurrogate Project
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace aero {

inline int resolve_thread_count(int n_threads) {
  if (n_threads > 0) return n_threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Splits [begin, end) into contiguous chunks, one per worker. fn receives
/// (chunk_begin, chunk_end). Workers must only touch state that is disjoint
/// per index; the partitioning must never influence results.
inline void parallel_for(std::int64_t begin, std::int64_t end, int n_threads,
                         const std::function<void(std::int64_t, std::int64_t)>& fn) {
  const std::int64_t count = end - begin;
  if (count <= 0) return;
  const int workers = std::min<std::int64_t>(resolve_thread_count(n_threads), count);
  if (workers <= 1) {
    fn(begin, end);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (int t = 1; t < workers; ++t) {
    const std::int64_t lo = begin + count * t / workers;
    const std::int64_t hi = begin + count * (t + 1) / workers;
    pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
  }
  fn(begin, begin + count / workers);
  for (auto& th : pool) th.join();
}

}  // namespace aero
