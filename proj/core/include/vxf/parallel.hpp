#pragma once

#include <cstdint>
#include <functional>

namespace vxf {

// Worker count: VXF_THREADS env var if set (clamped to >= 1), else
// hardware concurrency. Read once per process.
int max_threads();

// Runs fn over contiguous chunks covering [0, n). Chunks are disjoint, so
// callers that write disjoint outputs get bit-identical results for any
// thread count. Serial when n < 2 * min_chunk, when max_threads() == 1,
// or when already inside a parallel_for worker (no nesting).
void parallel_for(int64_t n, const std::function<void(int64_t, int64_t)>& fn,
                  int64_t min_chunk = 1024);

}  // namespace vxf
