#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace assignalg {

// Worker cap: ASSIGNALG_THREADS if set and positive, else the hardware
// concurrency (at least 1).
inline int max_workers() {
  if (const char* env = std::getenv("ASSIGNALG_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

// Runs fn(i) for i in [0, count); results must be written to slots that
// do not alias. Used for independent per-degree computations.
inline void parallel_for(int count, const std::function<void(int)>& fn) {
  int workers = max_workers();
  if (workers <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  if (workers > count) workers = count;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      for (int i = w; i < count; i += workers) fn(i);
    });
  }
  for (auto& t : threads) t.join();
}

}  // namespace assignalg
