#pragma once

#include <cstddef>
#include <functional>

namespace mchords {

// Worker count: MCHORDS_THREADS if set (>= 1), otherwise the hardware
// concurrency.
std::size_t worker_count();

// Calls body(i) for i in [0, n), spread over worker_count() threads. Callers
// write results into per-index slots so reductions stay order-independent.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace mchords
