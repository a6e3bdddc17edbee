#pragma once

// Deterministic data parallelism: work items are split into contiguous chunks,
// each chunk writes only its own slots, and any reduction happens afterwards in
// fixed index order. Thread count is capped by the QMOT_THREADS environment
// variable (default: hardware concurrency), so results never depend on it.

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace qmot {

inline int threadCap() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("QMOT_THREADS")) {
    const long requested = std::strtol(env, nullptr, 10);
    if (requested >= 1 && requested < static_cast<long>(hw)) return static_cast<int>(requested);
    if (requested >= static_cast<long>(hw)) return static_cast<int>(hw);
  }
  return static_cast<int>(hw);
}

/// Runs fn(begin, end) over a partition of [0, count). fn must only touch
/// state owned by indices in its range.
template <typename F>
void parallelForChunks(int count, F&& fn, int minPerThread = 8) {
  const int threads = std::min(threadCap(), std::max(1, count / minPerThread));
  if (threads <= 1 || count <= 0) {
    fn(0, count);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  const int chunk = (count + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const int begin = t * chunk;
    const int end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace qmot
