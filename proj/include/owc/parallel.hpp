#pragma once

#include <cstddef>
#include <functional>

namespace owc {

/// Worker count for map sweeps: the OWC_THREADS environment variable when it
/// parses to a positive integer, hardware concurrency otherwise (0 = auto).
std::size_t resolve_thread_count();

/// Run fn(i) for i in [0, n) on a static block partition. Each index is
/// processed exactly once; callers write disjoint output slots, so results
/// do not depend on the worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace owc
