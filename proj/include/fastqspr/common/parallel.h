// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FASTQSPR_COMMON_PARALLEL_H_
#define FASTQSPR_COMMON_PARALLEL_H_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace fastqspr {

// Number of workers used by ParallelFor when none is requested.
inline std::size_t DefaultWorkerCount() {
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

// Runs body(i) for i in [0, count) over contiguous static chunks. Callers
// write results by index, so output order never depends on scheduling. The
// first exception thrown by any worker is rethrown on the calling thread.
inline void ParallelFor(std::size_t count,
                        const std::function<void(std::size_t)>& body,
                        std::size_t workers = 0) {
  if (workers == 0) workers = DefaultWorkerCount();
  workers = std::min(workers, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    const std::size_t chunk = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(count, begin + chunk);
        try {
          for (std::size_t i = begin; i < end; ++i) body(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
}

}  // namespace fastqspr

#endif  // FASTQSPR_COMMON_PARALLEL_H_
