/*
  Timing comparison of the serial reference kernels against their
  OpenMP-parallel counterparts on fixed workloads.
*/

#include <chrono>
#include <cstdio>
#include <random>

#include "affpav/oracle.hpp"
#include "affpav/paving.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace affpav;

namespace {

template <typename F>
double time_ms(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void bench_bott_samelson() {
  std::vector<int> word = {1, 1, 1, 1, 1, 1, 1, 1};  // SL2, 8 steps
  oracle::Permutation v = {1, 0};
  long long serial_result = 0, parallel_result = 0;
  double ts = time_ms([&] {
    serial_result =
        oracle::bott_samelson_count_serial(2, word, v, 5, oracle::BSMode::Compactified);
  });
  double tp = time_ms([&] {
    parallel_result =
        oracle::bott_samelson_count(2, word, v, 5, oracle::BSMode::Compactified);
  });
  std::printf("bott_samelson SL2 p=5 r=8  serial %8.1f ms  omp %8.1f ms  (%lld vs %lld)\n",
              ts, tp, serial_result, parallel_result);
}

void bench_finite_constants() {
  oracle::Permutation w = {2, 0, 1};
  std::map<oracle::Permutation, long long> a, b;
  double ts = time_ms([&] { a = oracle::finite_structure_constants_serial(3, 3, {1}, w, w); });
  double tp = time_ms([&] { b = oracle::finite_structure_constants(3, 3, {1}, w, w); });
  std::printf("finite_constants SL3 p=3   serial %8.1f ms  omp %8.1f ms  (%s)\n", ts, tp,
              a == b ? "equal" : "MISMATCH");
}

void bench_fiber_batch() {
  auto rd = rootdata::RootDatum::make('B', 2, rootdata::Isogeny::Adjoint);
  std::mt19937 rng(12345);
  std::vector<paving::FiberJob> jobs;
  for (int k = 0; k < 200; ++k) {
    paving::FiberJob job;
    int r = 10 + static_cast<int>(rng() % 3);
    for (int i = 0; i < r; ++i) job.letters.push_back(static_cast<int>(rng() % 3));
    std::vector<int> target(job.letters.begin(), job.letters.begin() + rng() % job.letters.size());
    job.v = weyl::from_word(*rd, target);
    job.mode = k % 2 ? paving::Mode::Compactified : paving::Mode::Uncompactified;
    jobs.push_back(std::move(job));
  }
  std::vector<PolyQ> a, b;
  double ts = time_ms([&] { a = paving::batch_fiber_values_serial(*rd, jobs); });
  double tp = time_ms([&] { b = paving::batch_fiber_values(*rd, jobs); });
  std::printf("fiber batch B2 (200 jobs)  serial %8.1f ms  omp %8.1f ms  (%s)\n", ts, tp,
              a == b ? "equal" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not available; both columns run serially\n");
#endif
  bench_bott_samelson();
  bench_finite_constants();
  bench_fiber_batch();
  return 0;
}
