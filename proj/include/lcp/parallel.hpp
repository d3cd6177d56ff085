#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace lcp {

/// Worker count used by parallel_for. Resolution order: explicit set_num_threads,
/// LCP_THREADS env var, hardware concurrency.
int num_threads();
void set_num_threads(int n);

/// Runs fn(thread_index, begin, end) over a static partition of [0, count).
/// The partition depends only on `count` and the worker count, so callers that
/// reduce per-thread buffers in thread order get reproducible sums.
void parallel_for(int64_t count, const std::function<void(int, int64_t, int64_t)>& fn);

/// Element-wise convenience wrapper: fn(index) for index in [0, count).
void parallel_for_each(int64_t count, const std::function<void(int64_t)>& fn);

}  // namespace lcp
