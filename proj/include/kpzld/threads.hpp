#pragma once
// Worker-count handling and a deterministic parallel_for. Chunking is fixed
// by the range alone, so any reduction done per-index into preallocated
// storage is independent of the worker count.

#include <cstddef>
#include <functional>

namespace kpzld::threads {

// Resolution order: explicit set_worker_count() > KPZ_LDP_THREADS > hardware.
void set_worker_count(int n);
int worker_count();

// Calls fn(i) for i in [0, n); splits into contiguous chunks across workers.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

// Chunked variant: fn(begin, end) per chunk, cheaper when the body is tiny.
void parallel_chunks(std::size_t n,
                     const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace kpzld::threads
