#pragma once

#include <cstddef>
#include <functional>

namespace hetpanel::parallel {

/// Thread cap: HETPANEL_THREADS if set (>= 1), else hardware concurrency.
/// Read on every call so tests can adjust the environment between runs.
std::size_t thread_cap();

/// Runs body(begin, end) over a static chunking of [0, n). Workers write only
/// to disjoint slots chosen by index, so results do not depend on the thread
/// count. Nested calls run serially on the caller's thread.
void for_chunks(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

/// Convenience per-index form of for_chunks.
void for_each_index(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace hetpanel::parallel
