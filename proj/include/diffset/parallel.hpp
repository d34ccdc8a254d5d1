#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

namespace diffset {

// Worker count for all parallel scans. Initialized from DIFFSET_THREADS, else
// std::thread::hardware_concurrency(). Results never depend on this value.
std::size_t thread_count();
void set_thread_count(std::size_t n);

// Calls body(chunk_begin, chunk_end) over a partition of [begin, end) into contiguous
// chunks. Chunks may run concurrently; callers reduce per-index results afterwards.
void parallel_chunks(std::int64_t begin, std::int64_t end,
                     const std::function<void(std::int64_t, std::int64_t)>& body,
                     std::int64_t min_chunk = 1);

template <class F>
void parallel_for(std::int64_t begin, std::int64_t end, F&& f, std::int64_t min_chunk = 1) {
  parallel_chunks(
      begin, end,
      [&](std::int64_t b, std::int64_t e) {
        for (std::int64_t i = b; i < e; ++i) f(i);
      },
      min_chunk);
}

}  // namespace diffset
