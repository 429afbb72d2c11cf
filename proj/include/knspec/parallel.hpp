#pragma once

#include <cstddef>
#include <exception>
#include <mutex>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace knspec {

// Data-parallel loop over independent items. threads == 1 is the serial
// reference path; threads == 0 picks the library default. Results must be
// written to pre-sized slots so the output is identical either way.
template <class F>
void parallel_for(std::size_t items, int threads, F&& body) {
#ifdef _OPENMP
  if (threads != 1 && items > 1) {
    std::exception_ptr err;
    std::mutex err_mtx;
    const int nt = threads > 1 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nt)
    for (long long i = 0; i < static_cast<long long>(items); ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mtx);
        if (!err) err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);
    return;
  }
#endif
  (void)threads;
  for (std::size_t i = 0; i < items; ++i) body(i);
}

} // namespace knspec
