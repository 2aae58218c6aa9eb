#ifndef GROUPKIT_PARALLEL_HPP
#define GROUPKIT_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace groupkit {

/// Worker count used by parallel passes: explicit setting, else the
/// RIORDAN_JOBS environment variable, else hardware concurrency.
int worker_count();
void set_worker_count(int workers);

/// Splits [0, count) into contiguous chunks, one worker thread each.
/// fn(first, last, chunk_index) must only touch its own chunk's state;
/// results must be merged by the caller so that scheduling cannot be
/// observed.
template <class Fn>
void parallel_chunks(std::size_t count, Fn&& fn) {
  const std::size_t workers =
      std::min<std::size_t>(count, static_cast<std::size_t>(worker_count()));
  if (workers <= 1) {
    if (count) fn(std::size_t{0}, count, std::size_t{0});
    return;
  }
  std::vector<std::thread> threads;
  std::exception_ptr error;
  std::mutex error_mutex;
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t first = w * chunk;
    const std::size_t last = std::min(count, first + chunk);
    if (first >= last) break;
    threads.emplace_back([&, first, last, w] {
      try {
        fn(first, last, w);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace groupkit

#endif
