#pragma once

#include <cstddef>
#include <functional>

namespace tdom {

/// TDOM_THREADS env override, else hardware concurrency; always >= 1.
int default_thread_count();

/// Runs fn(0..n-1) across at most `threads` workers. Results must be written
/// by index; ordering of completion is unspecified. The first exception is
/// rethrown after all workers join.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace tdom
