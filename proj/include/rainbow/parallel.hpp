#pragma once

#include <cstddef>
#include <functional>

namespace rainbow {

/// Worker count from RAINBOW_THREADS (unset or 0 = hardware concurrency), at least 1.
unsigned worker_threads();

/// Runs task(i, worker) for i in [0, count) on up to worker_threads() threads.
/// Tasks are claimed in ascending order; `worker` indexes per-thread state.
/// The first exception thrown by any task is rethrown after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t, unsigned)>& task);

}  // namespace rainbow
