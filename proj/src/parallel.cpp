#include "diffset/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace diffset {

namespace {

std::size_t initial_threads() {
  if (const char* env = std::getenv("DIFFSET_THREADS")) {
    try {
      long v = std::stol(env);
      if (v >= 1) return static_cast<std::size_t>(v);
    } catch (...) {
    }
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

std::atomic<std::size_t>& threads_setting() {
  static std::atomic<std::size_t> value{initial_threads()};
  return value;
}

}  // namespace

std::size_t thread_count() { return threads_setting().load(); }
void set_thread_count(std::size_t n) { threads_setting().store(std::max<std::size_t>(1, n)); }

void parallel_chunks(std::int64_t begin, std::int64_t end,
                     const std::function<void(std::int64_t, std::int64_t)>& body,
                     std::int64_t min_chunk) {
  if (end <= begin) return;
  const std::int64_t total = end - begin;
  std::int64_t workers = static_cast<std::int64_t>(thread_count());
  workers = std::min(workers, std::max<std::int64_t>(1, total / std::max<std::int64_t>(1, min_chunk)));
  if (workers <= 1) {
    body(begin, end);
    return;
  }
  std::vector<std::thread> pool;
  // One slot per chunk; the lowest failing chunk wins so errors are thread-count independent.
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  const std::int64_t step = (total + workers - 1) / workers;
  for (std::int64_t w = 0; w < workers; ++w) {
    std::int64_t b = begin + w * step, e = std::min(end, b + step);
    if (b >= e) break;
    pool.emplace_back([&, w, b, e] {
      try {
        body(b, e);
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);
}

}  // namespace diffset
