#pragma once

#include <cstddef>
#include <functional>

namespace contica {

/// Resolves a requested worker count; 0 means hardware concurrency.
unsigned resolve_workers(unsigned requested) noexcept;

/// Runs task(i) for i in [0, count) on up to `workers` threads. Tasks are
/// claimed dynamically, so callers must write results by index. The first
/// exception thrown by any task is rethrown after all workers stop.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& task);

}  // namespace contica
