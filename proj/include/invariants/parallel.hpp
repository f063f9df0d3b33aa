#pragma once

#include <cstddef>
#include <functional>

namespace invariants {

/// Number of worker threads: hardware concurrency, capped by the
/// INVARIANTS_THREADS environment variable when set.
unsigned thread_budget();

/// Run fn(i) for i in [0, count), split across the thread budget. Each index
/// is visited exactly once; callers write to disjoint slots so the result is
/// deterministic regardless of the split.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace invariants
