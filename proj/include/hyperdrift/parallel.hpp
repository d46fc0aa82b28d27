#pragma once

#include <cstddef>
#include <functional>

namespace hyperdrift {

/// Worker cap: HYPERDRIFT_THREADS when set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
std::size_t worker_count();

/// Runs fn(i) for i in [0, count) on up to worker_count() threads. Results
/// must be written to per-index slots by the caller. The first exception
/// thrown by any task is rethrown after all workers stop.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace hyperdrift
