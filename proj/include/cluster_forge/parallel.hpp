#pragma once

#include <cstddef>
#include <functional>

namespace cluster_forge {

/// Worker cap: CLUSTER_FORGE_THREADS if set to a positive integer, else the
/// hardware concurrency (at least 1).
std::size_t worker_limit();

/// Runs body(i) for i in [0, count) on up to worker_limit() threads. Each
/// index is handled exactly once; callers write results into slot i so the
/// outcome does not depend on scheduling. If several bodies throw, the
/// exception from the lowest index is rethrown after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace cluster_forge
