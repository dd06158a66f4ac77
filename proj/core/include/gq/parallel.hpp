#ifndef GQ_PARALLEL_HPP_
#define GQ_PARALLEL_HPP_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace gq {

  //! Calls body(i) for every i in [0, n) using up to `threads` worker
  //! threads. Each index is handled exactly once; callers write results into
  //! per-index slots so the outcome does not depend on scheduling. The first
  //! exception thrown by a body is rethrown after all workers have joined.
  template <typename Body>
  void parallel_for(std::size_t n, std::size_t threads, Body&& body) {
    threads = std::max<std::size_t>(1, std::min(threads, n));
    if (threads == 1) {
      for (std::size_t i = 0; i < n; ++i) {
        body(i);
      }
      return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr       failure;
    std::mutex               failure_mtx;
    auto                     worker = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < n;) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lg(failure_mtx);
          if (!failure) {
            failure = std::current_exception();
          }
          next = n;
        }
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads - 1);
    for (std::size_t t = 1; t < threads; ++t) {
      pool.emplace_back(worker);
    }
    worker();
    for (auto& th : pool) {
      th.join();
    }
    if (failure) {
      std::rethrow_exception(failure);
    }
  }

}  // namespace gq

#endif  // GQ_PARALLEL_HPP_
