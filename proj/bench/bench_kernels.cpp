// Benchmark of the OpenMP kernels against their serial references:
// Boolean matrix products, brute-force enumeration, and a sweep batch.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>

#include "crr/bitmatrix.hpp"
#include "crr/generator.hpp"
#include "crr/solver.hpp"
#include "crr/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

double time_ms(const std::function<void()>& fn, int reps = 3) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = Clock::now();
    fn();
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    if (ms < best) best = ms;
  }
  return best;
}

crr::BitMatrix random_matrix(std::size_t dim, double p, std::uint64_t seed) {
  crr::GenSpec spec{dim, 1, p, 0.0, seed};
  return crr::gen_instance(spec).s();
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif

  std::printf("\nbool_product, serial vs parallel (ms, best of 3)\n");
  std::printf("%8s %12s %12s %8s\n", "dim", "serial", "parallel", "speedup");
  for (std::size_t dim : {256, 512, 1024, 2048}) {
    const crr::BitMatrix a = random_matrix(dim, 0.5, 1);
    const crr::BitMatrix b = random_matrix(dim, 0.5, 2);
    crr::BitMatrix sink;
    const double serial = time_ms([&] { sink = crr::bool_product_serial(a, b); });
    const double parallel = time_ms([&] { sink = crr::bool_product(a, b); });
    std::printf("%8zu %12.3f %12.3f %8.2fx\n", dim, serial, parallel, serial / parallel);
  }

  std::printf("\nbrute_force on a hard unsat (3,4) instance (ms, best of 3)\n");
  {
    crr::GenSpec spec{3, 4, 0.5, 0.5, 7};
    const crr::CrrInstance inst = crr::gen_instance(spec);
    const double serial = time_ms([&] { (void)crr::brute_force_serial(inst); });
    const double parallel = time_ms([&] { (void)crr::brute_force(inst); });
    std::printf("%8s %12.3f %12.3f %8.2fx\n", "3x4", serial, parallel, serial / parallel);
  }

  std::printf("\nsweep of 20 (8,8) instances, 1 worker vs default (ms, best of 3)\n");
  {
    crr::SweepSpec spec;
    spec.sizes = {{8, 8}};
    spec.count = 20;
    spec.timeout_s = 60.0;
    spec.seed = 3;
    const auto tmp = std::filesystem::temp_directory_path();
    crr::SweepOutputs one;
    one.csv_path = (tmp / "crr_bench_1.csv").string();
    crr::SweepOutputs many;
    many.csv_path = (tmp / "crr_bench_n.csv").string();
    spec.jobs = 1;
    const double serial = time_ms([&] { crr::run_sweep(spec, one); }, 1);
    spec.jobs = 0;
    const double parallel = time_ms([&] { crr::run_sweep(spec, many); }, 1);
    std::printf("%8s %12.3f %12.3f %8.2fx\n", "20x", serial, parallel, serial / parallel);
    std::filesystem::remove(one.csv_path);
    std::filesystem::remove(many.csv_path);
  }
  return 0;
}
