// Deterministic work distribution: results are indexed by task, so any
// thread count produces the same merged output.
#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace tomofix {

template <class F>
void parallel_indexed(std::size_t count, int threads, F&& f) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      f(i);
    }
  };
  std::vector<std::thread> pool;
  std::size_t n = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
  pool.reserve(n);
  for (std::size_t t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace tomofix
