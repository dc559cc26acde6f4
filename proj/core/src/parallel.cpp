#include "hetpanel/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace hetpanel::parallel {

namespace {
thread_local bool g_in_parallel_region = false;
}

std::size_t thread_cap() {
  if (const char* env = std::getenv("HETPANEL_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) return static_cast<std::size_t>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void for_chunks(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body) {
  if (n == 0) return;
  const std::size_t threads = g_in_parallel_region ? 1 : std::min(thread_cap(), n);
  if (threads <= 1) {
    g_in_parallel_region = true;
    try {
      body(0, n);
    } catch (...) {
      g_in_parallel_region = false;
      throw;
    }
    g_in_parallel_region = false;
    return;
  }

  std::vector<std::thread> pool;
  pool.reserve(threads);
  std::vector<std::exception_ptr> errors(threads);
  const std::size_t chunk = (n + threads - 1) / threads;
  for (std::size_t t = 0; t < threads; ++t) {
    const std::size_t lo = std::min(t * chunk, n);
    const std::size_t hi = std::min(lo + chunk, n);
    pool.emplace_back([&, t, lo, hi] {
      g_in_parallel_region = true;
      try {
        if (lo < hi) body(lo, hi);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);
}

void for_each_index(std::size_t n, const std::function<void(std::size_t)>& body) {
  for_chunks(n, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) body(i);
  });
}

}  // namespace hetpanel::parallel
