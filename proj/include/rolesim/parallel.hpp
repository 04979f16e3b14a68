// parallel.hpp — Minimal fork/join helper for the iteration kernels.
//
// Every parallel loop in this project follows the same contract: workers read an
// immutable snapshot and write disjoint output cells, so results are bitwise
// independent of the worker count. This helper only deals in contiguous index
// ranges; reductions are done over per-chunk slots by the caller.
#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace rolesim {

// Resolve an effective worker count: an explicit request wins, then the
// ROLESIM_THREADS environment variable, then the hardware concurrency.
// Always at least 1.
int resolve_threads(int requested);

// Split [0, count) into at most `threads` contiguous chunks and run
// fn(chunk_index, begin, end) on each, in parallel. fn must only write state
// owned by its chunk. The number of chunks actually used is returned (callers
// size per-chunk reduction slots with it before invoking).
//
// Exceptions thrown by workers are captured and the first one is rethrown
// after all workers have joined.
int parallel_chunks(std::size_t count, int threads,
                    const std::function<void(int, std::size_t, std::size_t)>& fn);

}  // namespace rolesim
