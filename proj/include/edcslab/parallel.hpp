#pragma once

#include <cstddef>
#include <functional>

namespace edcslab {

/// Worker cap: EDCSLAB_THREADS if set (clamped to >= 1), otherwise the
/// hardware concurrency.
int worker_count();

/// Run fn(i) for i in [0, count) across up to worker_count() threads.
/// Items are assigned in fixed strides, so writes keyed by i are
/// deterministic regardless of scheduling. fn must not throw.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace edcslab
