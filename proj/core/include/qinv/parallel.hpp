#pragma once

#include <cstddef>
#include <functional>

namespace qinv::detail {

/// Worker count for data-parallel loops: QINV_THREADS when set (>= 1),
/// otherwise std::thread::hardware_concurrency().
std::size_t worker_count();

/// Runs fn(i) for i in [0, n), split across worker_count() threads.
/// Falls back to a plain loop for a single worker. fn must be thread-safe.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace qinv::detail
