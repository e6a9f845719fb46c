#pragma once

#include <cstddef>
#include <functional>

namespace ksb {

// Worker count: min(hardware_concurrency, KSPACE_BENCH_THREADS if set).
std::size_t worker_count();

// Runs fn(i) for i in [0, n). Work items must be independent; results land in
// caller-owned slots so iteration order never affects output bytes.
// Serial when n or the worker count is 1.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace ksb
