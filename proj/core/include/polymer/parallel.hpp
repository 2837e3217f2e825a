#pragma once

#include <cstddef>
#include <functional>

namespace polymer {

// Worker count: POLYMER_ENDPOINT_THREADS if set and positive, else the
// hardware concurrency (at least 1).
int thread_count();

// Runs body(i) for i in [0, n) over contiguous static chunks, one per worker.
// Each index is visited exactly once, so outputs written per index do not
// depend on the schedule. The first exception thrown is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace polymer
