#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace dhsp {

// Runs fn(i) for i in [0, count) across `threads` workers. Callers that need
// deterministic results write into slot i and reduce sequentially afterwards;
// the schedule never influences the output that way.
template <typename Fn>
void parallel_for(std::int64_t count, int threads, Fn&& fn) {
  if (threads < 1) threads = 1;
  if (threads > count) threads = static_cast<int>(count);
  if (threads <= 1) {
    for (std::int64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::int64_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  for (std::thread& worker : pool) worker.join();
}

}  // namespace dhsp
