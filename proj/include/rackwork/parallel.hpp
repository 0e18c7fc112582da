#pragma once

// Thin OpenMP shim. Without OpenMP every kernel runs on one thread.

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace rackwork::parallel {

#if defined(_OPENMP)
inline constexpr bool enabled = true;
inline int max_threads() { return omp_get_max_threads(); }
inline void set_threads(int k) { omp_set_num_threads(k < 1 ? 1 : k); }
#else
inline constexpr bool enabled = false;
inline int max_threads() { return 1; }
inline void set_threads(int) {}
#endif

/// Restores the previous thread count on scope exit.
class ThreadScope {
 public:
  explicit ThreadScope(int k) : saved_(max_threads()) { set_threads(k); }
  ~ThreadScope() { set_threads(saved_); }
  ThreadScope(const ThreadScope&) = delete;
  ThreadScope& operator=(const ThreadScope&) = delete;

 private:
  int saved_;
};

}  // namespace rackwork::parallel
