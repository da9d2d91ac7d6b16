#ifndef WMOD_PARALLEL_HPP
#define WMOD_PARALLEL_HPP

#include <functional>

namespace wmod {

/// Worker count: WMOD_THREADS when set (>=1), otherwise the hardware count.
int worker_count();

/// Runs fn(0..tasks-1), possibly concurrently. Each index is processed exactly
/// once; callers keep determinism by writing to per-index slots.
void parallel_for(int tasks, const std::function<void(int)>& fn);

}  // namespace wmod

#endif
