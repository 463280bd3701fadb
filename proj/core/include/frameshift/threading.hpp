#pragma once

#include <cstddef>
#include <functional>

namespace frameshift::threading {

/// Worker count used by parallel_for. 0 = resolve from FRAMESHIFT_THREADS,
/// falling back to 1. Results never depend on this setting.
void set_threads(int n);
int threads();

/// Runs fn(i) for i in [0, count) split across workers in contiguous chunks.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace frameshift::threading
