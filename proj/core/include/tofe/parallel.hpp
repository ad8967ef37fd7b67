#pragma once

#include <functional>

namespace tofe {

// Runs fn(i) for i in [0, n) on up to `jobs` worker threads (0 = one per
// hardware core). Work items must write only to their own output slot;
// results are then independent of the worker count.
void parallel_for(int n, int jobs, const std::function<void(int)>& fn);

int effective_jobs(int jobs);

}  // namespace tofe
