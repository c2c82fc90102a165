// Times the serial reference loops against the OpenMP kernels on the
// heavier corpus members.  Build and run:
//   cmake --build build --target bench_scans && ./build/bench/bench_scans

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "ua/corpus.hpp"
#include "ua/scans.hpp"

using namespace ua;

namespace {

volatile bool g_sink = false;

template <class F>
double time_ms(F&& fn, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

void row(const char* name, const char* kernel, double serial_ms, double parallel_ms) {
  std::printf("%-10s %-22s %10.3f %12.3f %8.2fx\n", name, kernel, serial_ms, parallel_ms,
              parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::atoi(argv[1]) : 5;
  std::printf("%-10s %-22s %10s %12s %8s   (threads: %d, reps: %d)\n", "algebra",
              "kernel", "serial/ms", "parallel/ms", "speedup", jobs(), reps);

  for (const char* name : {"bare5", "chain6", "Z2xZ2xZ2", "S3xZ2", "Q8"}) {
    const AlgebraPtr a = builtin(name);
    const CongruenceLattice l = all_congruences(a);

    const double sl_s =
        time_ms([&] { g_sink = shifting_lemma(l, Exec::serial).holds; }, reps);
    const double sl_p =
        time_ms([&] { g_sink = shifting_lemma(l, Exec::parallel).holds; }, reps);
    row(name, "shifting-lemma", sl_s, sl_p);

    const double g_s =
        time_ms([&] { g_sink = gumm_fibrations(l, Exec::serial).holds; }, reps);
    const double g_p =
        time_ms([&] { g_sink = gumm_fibrations(l, Exec::parallel).holds; }, reps);
    row(name, "gumm-fibrations", g_s, g_p);

    const double b_s =
        time_ms([&] { g_sink = bourn_scan(l, Exec::serial).counterexample; }, reps);
    const double b_p =
        time_ms([&] { g_sink = bourn_scan(l, Exec::parallel).counterexample; }, reps);
    row(name, "permutability-transfer", b_s, b_p);

    if (a->size() <= 8) {
      const double bf_s =
          time_ms([&] { g_sink = brute_force_congruences(a, Exec::serial).empty(); }, reps);
      const double bf_p =
          time_ms([&] { g_sink = brute_force_congruences(a, Exec::parallel).empty(); }, reps);
      row(name, "brute-force-filter", bf_s, bf_p);
    }
  }
  return 0;
}
