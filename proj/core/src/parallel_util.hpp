#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace dumont::detail {

// Runs task(0..count-1) on up to `threads` workers and returns the results
// indexed by task id, so callers can merge in a fixed order regardless of
// scheduling. The first exception wins and is rethrown after all workers
// join.
template <typename R>
std::vector<R> run_indexed(int threads, int count, const std::function<R(int)>& task) {
  std::vector<R> results(static_cast<std::size_t>(count));
  if (count == 0) return results;
  if (threads <= 1 || count == 1) {
    for (int i = 0; i < count; ++i) results[static_cast<std::size_t>(i)] = task(i);
    return results;
  }
  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= count || failed.load()) return;
      try {
        results[static_cast<std::size_t>(i)] = task(i);
      } catch (...) {
        std::scoped_lock lock(error_mutex);
        if (!error) error = std::current_exception();
        failed.store(true);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const int workers = std::min(threads, count);
  pool.reserve(static_cast<std::size_t>(workers));
  for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return results;
}

} // namespace dumont::detail
