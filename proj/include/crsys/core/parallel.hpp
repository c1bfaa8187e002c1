#pragma once

#include <cstddef>
#include <functional>

namespace crsys::core {

/// Worker count from CRSYS_THREADS (default: hardware concurrency, at least 1).
int thread_count();

/// Runs body(i) for i in [0, n), split into contiguous blocks across threads.
/// Each index is written by exactly one worker, so results do not depend on
/// the thread count as long as body(i) only touches slot i.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace crsys::core
