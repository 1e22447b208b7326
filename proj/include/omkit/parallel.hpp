#pragma once

// Worker pool used by the canonical-form scans and the enumeration. Results
// never depend on the worker count: callers merge per-task outputs in task
// order.

#include <cstddef>
#include <functional>

namespace omkit {

/// Explicit override if set, else OMKIT_WORKERS, else hardware concurrency.
int worker_count();
/// 0 restores the default.
void set_worker_count(int workers);

/// Runs body(i) for i in [0, count) on up to worker_count() threads with
/// dynamic scheduling. An exception thrown by a task is rethrown after all
/// threads have joined.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace omkit
