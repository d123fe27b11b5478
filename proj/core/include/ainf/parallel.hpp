#pragma once

#include <cstddef>
#include <functional>

namespace ainf {

// Worker count: AINF_WORKERS if set and positive, else the hardware concurrency.
int default_workers();

// Runs body(i) for i in [0, n) on up to `workers` threads (0 = default).
// Each index is handled exactly once; callers write results into per-index slots.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, int workers = 0);

}  // namespace ainf
