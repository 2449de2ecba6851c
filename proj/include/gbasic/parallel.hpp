#ifndef GBASIC_PARALLEL_HPP
#define GBASIC_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "gbasic/errors.hpp"

namespace gbasic {

/// Runs fn(0..n-1), spreading work over `threads` workers when > 1.
/// The first exception thrown by any task is rethrown to the caller.
inline void parallel_for(long n, int threads,
                         const std::function<void(long)>& fn) {
  if (n <= 0) return;
  if (threads <= 1 || n == 1) {
    for (long i = 0; i < n; ++i) fn(i);
    return;
  }
  int workers = static_cast<int>(std::min<long>(threads, n));
  std::atomic<long> next{0};
  std::exception_ptr first_error;
  std::mutex error_lock;
  auto body = [&] {
    for (;;) {
      long i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> hold(error_lock);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(body);
  for (std::thread& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

/// Thread count: the GRADED_BASIC_THREADS environment variable wins over
/// the flag; 0 means one thread per hardware core.
inline int resolve_threads(int flag_value) {
  int value = flag_value;
  if (const char* env = std::getenv("GRADED_BASIC_THREADS")) {
    try {
      value = std::stoi(env);
    } catch (...) {
      throw validation_error("GRADED_BASIC_THREADS is not an integer: " +
                             std::string(env));
    }
  }
  if (value < 0) throw validation_error("thread count must be >= 0");
  if (value == 0) {
    unsigned hw = std::thread::hardware_concurrency();
    value = hw ? static_cast<int>(hw) : 1;
  }
  return value;
}

}  // namespace gbasic

#endif
