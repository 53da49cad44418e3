#pragma once

// Static-partition worker pool. Results are written by index, so the output
// does not depend on the number of workers.

#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace lerchz {

// Number of workers used when a caller passes 0.
unsigned default_workers();

// Calls fn(i) for every i in [0, n). The first exception thrown by any call is
// rethrown after all workers have stopped.
void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)>& fn);

template <class T, class F>
std::vector<T> parallel_map(std::size_t n, unsigned workers, F fn) {
  std::vector<T> out(n);
  parallel_for(n, workers, [&](std::size_t i) { out[i] = fn(i); });
  return out;
}

}  // namespace lerchz
