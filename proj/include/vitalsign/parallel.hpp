#pragma once

#include <cstddef>
#include <functional>

namespace vitalsign {

// Runs fn(i) for i in [0, n). Work items must be independent; results should be
// written to preallocated slots indexed by i so the outcome does not depend on
// scheduling. jobs <= 1 runs inline.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn);

// Resolves a --jobs value: explicit flag wins, then VITALSIGN_JOBS, then 1.
int resolve_jobs(int flag_value);

}  // namespace vitalsign
