#pragma once

#include <cstddef>
#include <exception>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mgdw {

// OpenMP-backed loop over [0, n). Each index must be independent of the
// others; results written to index i must not depend on evaluation order.
// Exceptions thrown by the body are captured and rethrown on the calling
// thread (the first one wins).
template <class F>
void parallel_for(std::ptrdiff_t n, F&& body) {
  std::exception_ptr eptr = nullptr;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical(mgdw_parallel_for_eptr)
      if (!eptr) eptr = std::current_exception();
    }
  }
#else
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
      if (!eptr) eptr = std::current_exception();
    }
  }
#endif
  if (eptr) std::rethrow_exception(eptr);
}

// Serial reference loop with identical semantics; kept so tests and the
// benchmark can compare against the parallel path.
template <class F>
void serial_for(std::ptrdiff_t n, F&& body) {
  for (std::ptrdiff_t i = 0; i < n; ++i) body(i);
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void set_threads(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

}  // namespace mgdw
