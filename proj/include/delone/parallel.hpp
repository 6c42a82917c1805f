/* Apache License, Version 2.0 */

#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace delone {

/// Worker cap: DELONE_THREADS if set and positive, else the hardware count.
int worker_count();

/// Runs fn(i) for i in [0, n) on up to worker_count() threads with static
/// chunking. Results must be written to per-index slots so that output does
/// not depend on the schedule. The first exception is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace delone
