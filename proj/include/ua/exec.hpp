#pragma once

#include <cstdint>
#include <functional>

namespace ua {

// Every scan in the library comes in two flavours: a plain serial loop (the
// reference) and an OpenMP kernel that must produce identical results for any
// thread count.
enum class Exec { serial, parallel };

void set_jobs(int n);  // 0 restores the library default
int jobs();

// Scans [0, total) and returns the smallest index where ok(i) is false, or -1
// if ok holds everywhere.  The parallel kernel keeps a shared minimum and
// skips chunks past it, so the returned index does not depend on scheduling.
int64_t first_fail(Exec ex, int64_t total, const std::function<bool(int64_t)>& ok);

inline bool scan_all(Exec ex, int64_t total, const std::function<bool(int64_t)>& ok) {
  return first_fail(ex, total, ok) < 0;
}

}  // namespace ua
