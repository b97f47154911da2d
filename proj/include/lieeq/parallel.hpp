#pragma once

#include <cstddef>
#include <functional>

namespace lieeq {

/// Worker cap shared by every parallel loop; 0 means hardware concurrency.
void set_max_threads(unsigned n);
unsigned max_threads();

/// Splits [0, n) into contiguous chunks and runs body(begin, end) on each.
/// Chunks are fixed by n and the worker count, so any reduction the caller
/// does per chunk and merges in chunk order is deterministic. The first
/// exception thrown by a worker is rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body,
                  std::size_t min_chunk = 1024);

}  // namespace lieeq
