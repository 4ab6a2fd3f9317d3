#pragma once

#include <cstddef>
#include <functional>

namespace pacsim {

/// Worker count: PACSIM_THREADS when set (>= 1), otherwise
/// hardware_concurrency.
unsigned thread_count();

/// Runs fn(i) for i in [0, n) on a small thread pool. Work items must be
/// independent; results should be written to preallocated slots so the
/// output is identical to a serial run.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace pacsim
