#include "plueckerlab/parallel.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>

namespace plab::parallel {

namespace {
std::atomic<int> override_threads{0};
}

int thread_count() {
  if (int o = override_threads.load(); o > 0) return o;
  static const int from_env = [] {
    const char* v = std::getenv("PLUECKERLAB_THREADS");
    if (!v) return 0;
    try {
      int n = std::stoi(v);
      return n > 0 ? n : 0;
    } catch (...) {
      return 0;
    }
  }();
  // The variable caps the OpenMP default; it never raises it.
  return from_env > 0 ? std::min(from_env, omp_get_max_threads()) : omp_get_max_threads();
}

void set_thread_count(int n) { override_threads.store(n > 0 ? n : 0); }

}  // namespace plab::parallel
