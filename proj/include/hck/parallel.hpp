#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hck::par {

inline int set_threads(int threads) {
#ifdef _OPENMP
  if (threads <= 0) threads = omp_get_num_procs();
  omp_set_num_threads(threads);
  return threads;
#else
  (void)threads;
  return 1;
#endif
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Evaluates fn(i) for i in [0, n) in parallel. Results land in index order, so
// the output never depends on the thread count.
template <class T, class Fn>
std::vector<T> map_indexed(std::int64_t n, Fn&& fn) {
  std::vector<T> out(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = fn(i);
  return out;
}

// First index in [0, n) with pred(i) true, or -1. Deterministic: the smallest
// such index is returned regardless of scheduling.
template <class Pred>
std::int64_t find_first(std::int64_t n, Pred&& pred) {
  std::int64_t best = n;
#pragma omp parallel for schedule(dynamic, 256) reduction(min : best)
  for (std::int64_t i = 0; i < n; ++i) {
    if (i < best && pred(i)) best = i;
  }
  return best == n ? -1 : best;
}

template <class Fn>
std::int64_t count_if(std::int64_t n, Fn&& fn) {
  std::int64_t total = 0;
#pragma omp parallel for schedule(dynamic, 256) reduction(+ : total)
  for (std::int64_t i = 0; i < n; ++i)
    if (fn(i)) ++total;
  return total;
}

}  // namespace hck::par
