#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace cameral {

// Thread cap: CAMERAL_THREADS when set, otherwise hardware concurrency.
inline std::size_t max_threads() {
  if (const char* env = std::getenv("CAMERAL_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<std::size_t>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Static-partition parallel loop. Work items write results by index, so the
// merged output is deterministic regardless of the thread count.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min(max_threads(), n == 0 ? std::size_t{1} : n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t t = 0; t < workers; ++t) {
    threads.emplace_back([t, n, workers, &body] {
      for (std::size_t i = t; i < n; i += workers) body(i);
    });
  }
  for (auto& th : threads) th.join();
}

}  // namespace cameral
