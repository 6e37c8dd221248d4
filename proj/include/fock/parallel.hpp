#pragma once

#include <cstddef>
#include <functional>

namespace fock {

/// Worker count for parallel sweeps. Honors FOCK_TOEPLITZ_THREADS as an upper
/// cap; otherwise uses the hardware concurrency. Always at least 1.
unsigned worker_count();

/// Runs body(i) for i in [0, count) on up to worker_count() threads.
///
/// Each index is processed exactly once; callers write results to slots owned
/// by the index, so the output does not depend on scheduling. If any body
/// throws, the exception from the lowest failing index is rethrown after all
/// workers have joined.
void parallel_for(std::size_t count, const std::function<void(std::size_t)> &body);

} // namespace fock
