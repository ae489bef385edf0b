#pragma once

#include <cstddef>
#include <vector>

namespace plab::parallel {

/// Thread cap: PLUECKERLAB_THREADS when set to a positive integer, else the
/// OpenMP default.
int thread_count();
/// Overrides the cap for the current process (0 restores the default).
void set_thread_count(int n);

/// out[i] = fn(i) for i in [0, n), evaluated with OpenMP. Each slot is written
/// by exactly one iteration, so results do not depend on the schedule.
template <typename T, typename Fn>
std::vector<T> map(std::size_t n, Fn&& fn) {
  std::vector<T> out(n);
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count())
  for (long i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
  return out;
}

/// Serial reference for map().
template <typename T, typename Fn>
std::vector<T> map_serial(std::size_t n, Fn&& fn) {
  std::vector<T> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(fn(i));
  return out;
}

}  // namespace plab::parallel
