#pragma once

#include <cstddef>
#include <functional>

namespace fracspec {

// Number of worker threads.  Reads FS_THREADS once (values < 1 or garbage
// fall back to hardware_concurrency); result is cached for the process.
std::size_t thread_budget();

// Runs fn(i) for every i in [0, count) across at most thread_budget()
// workers.  Work items are claimed from an atomic counter, so the *set* of
// executed items is fixed; callers that need determinism must write results
// into per-index slots and combine them in index order afterwards.  The
// first exception thrown by any item is rethrown on the calling thread.
void parallel_chunks(std::size_t count, const std::function<void(std::size_t)>& fn);

} // namespace fracspec
