#ifndef INDPOLY_PARALLEL_HPP
#define INDPOLY_PARALLEL_HPP

#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace indpoly {

/// out[i] = fn(i) for i < count, on `jobs` threads. Item i goes to worker
/// i mod jobs; results land by index, so the output is independent of jobs.
/// The first exception thrown by any item is rethrown after all workers stop.
template <class Fn>
auto parallel_map(std::size_t count, int jobs, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
  using T = decltype(fn(std::size_t{}));
  std::vector<T> out(count);
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      out[i] = fn(i);
    return out;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> workers;
  for (int w = 0; w < jobs; ++w)
    workers.emplace_back([&, w] {
      try {
        for (std::size_t i = static_cast<std::size_t>(w); i < count; i += static_cast<std::size_t>(jobs))
          out[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error)
          error = std::current_exception();
      }
    });
  for (auto &t : workers)
    t.join();
  if (error)
    std::rethrow_exception(error);
  return out;
}

}  // namespace indpoly

#endif
