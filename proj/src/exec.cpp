#include "ua/exec.hpp"

#include <algorithm>
#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ua {

namespace {
int g_jobs = 0;
}

void set_jobs(int n) {
  g_jobs = n < 0 ? 0 : n;
#ifdef _OPENMP
  if (n >= 1) omp_set_num_threads(n);
#endif
}

int jobs() {
#ifdef _OPENMP
  return g_jobs >= 1 ? g_jobs : omp_get_max_threads();
#else
  return 1;
#endif
}

static int64_t first_fail_serial(int64_t total, const std::function<bool(int64_t)>& ok) {
  for (int64_t i = 0; i < total; ++i)
    if (!ok(i)) return i;
  return -1;
}

int64_t first_fail(Exec ex, int64_t total, const std::function<bool(int64_t)>& ok) {
  if (total <= 0) return -1;
#ifdef _OPENMP
  if (ex == Exec::parallel && jobs() > 1 && total > 1) {
    std::atomic<int64_t> best{total};
    const int64_t chunk =
        std::clamp<int64_t>(total / (16 * static_cast<int64_t>(jobs())), 1, 4096);
    const int64_t nchunks = (total + chunk - 1) / chunk;
#pragma omp parallel for schedule(dynamic, 1)
    for (int64_t c = 0; c < nchunks; ++c) {
      const int64_t lo = c * chunk;
      if (lo >= best.load(std::memory_order_relaxed)) continue;
      const int64_t hi = std::min(total, lo + chunk);
      for (int64_t i = lo; i < hi; ++i) {
        if (i >= best.load(std::memory_order_relaxed)) break;
        if (!ok(i)) {
          int64_t cur = best.load(std::memory_order_relaxed);
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          break;
        }
      }
    }
    const int64_t found = best.load();
    return found == total ? -1 : found;
  }
#else
  (void)ex;
#endif
  return first_fail_serial(total, ok);
}

}  // namespace ua
