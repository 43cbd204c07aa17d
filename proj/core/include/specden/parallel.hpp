#pragma once

#include <cstddef>
#include <functional>

namespace specden {

// Worker cap: SPECDEN_THREADS if set (clamped to >= 1), else hardware
// concurrency. The kernels below never share mutable state across indices, so
// callers only need per-index output slots to stay deterministic.
int max_threads();

// Runs fn(i) for i in [0, n). Indices are distributed in contiguous blocks;
// exceptions propagate from the first failing index.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace specden
