#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace matsolve {

// Worker cap: hardware concurrency, optionally lowered by MATSOLVE_THREADS.
inline int worker_count() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  if (const char* env = std::getenv("MATSOLVE_THREADS")) {
    int req = std::atoi(env);
    if (req >= 1 && req < hw) hw = req;
  }
  return hw;
}

// Index-parallel loop; results must be written to preassigned slots so the
// outcome is identical regardless of the worker count.
template <class Fn>
void parallel_for(size_t count, Fn&& fn) {
  const int workers = worker_count();
  if (workers <= 1 || count < 64) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= count) return;
        fn(i);
      }
    });
  }
  for (std::thread& t : pool) t.join();
}

}  // namespace matsolve
