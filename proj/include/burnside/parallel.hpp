#pragma once

/* Work-sharing helper.  BURNSIDE_KIT_THREADS caps the number of worker
 * threads; results must be written to preallocated slots indexed by the
 * loop variable so the outcome is independent of scheduling.
 */

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace burnside {

inline std::size_t thread_budget() {
  std::size_t hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* s = std::getenv("BURNSIDE_KIT_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end != s && v >= 1) return std::min<std::size_t>(hw, std::size_t(v));
  }
  return hw;
}

template <typename F>
void parallel_for(std::size_t count, F&& body) {
  const std::size_t workers = std::min(thread_budget(), count == 0 ? 1 : count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto run = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(run);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace burnside
