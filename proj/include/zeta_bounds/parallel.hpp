#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace zeta_bounds {

/// Number of workers to use when the caller passes 0.
inline unsigned default_jobs() {
  unsigned const n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

/// Fork-join loop over [0, count). Work is split into contiguous blocks, so
/// results written by index are independent of the worker count. The first
/// exception thrown by any worker is rethrown on the calling thread.
template <typename Body>
void parallel_for(std::size_t count, unsigned jobs, Body&& body) {
  if (jobs == 0) jobs = default_jobs();
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> workers;
    workers.reserve(jobs);
    std::size_t const block = (count + jobs - 1) / jobs;
    for (unsigned w = 0; w < jobs; ++w) {
      std::size_t const begin = w * block;
      std::size_t const end = std::min(count, begin + block);
      if (begin >= end) break;
      workers.emplace_back([&, begin, end] {
        try {
          for (std::size_t i = begin; i < end; ++i) body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace zeta_bounds
