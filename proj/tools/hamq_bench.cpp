// Benchmark comparing the OpenMP-parallel trial and enumeration loops
// against their serial reference paths. The two paths must produce
// identical records; unit tests assert that, here we time it.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hamq/attack_small.hpp"
#include "hamq/bounds.hpp"
#include "hamq/harness.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <typename F>
double timed(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return seconds_since(start);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (OpenMP disabled)\n");
#endif

  hamq::ExperimentConfig cfg;
  cfg.attack = hamq::AttackId::Small;
  cfg.n_values = {10000};
  cfg.m_values = {10};
  cfg.k_values = {51};
  cfg.trials = 600;
  cfg.master_seed = 7;

  hamq::SweepResult serial_sweep, parallel_sweep;
  const double t_sweep_serial = timed([&] { serial_sweep = hamq::run_sweep(cfg, false); });
  const double t_sweep_parallel = timed([&] { parallel_sweep = hamq::run_sweep(cfg, true); });
  const bool sweep_equal = serial_sweep.records == parallel_sweep.records;

  std::printf("sweep  (small n=10000 m=10 k=51, %lld trials)\n",
              static_cast<long long>(cfg.trials));
  std::printf("  serial   %8.3f s\n", t_sweep_serial);
  std::printf("  parallel %8.3f s   speedup %.2fx   records identical: %s\n", t_sweep_parallel,
              t_sweep_serial / t_sweep_parallel, sweep_equal ? "yes" : "NO");

  const hamq::SmallKAttack attack(3);
  mpq_class serial_value, parallel_value;
  const double t_enum_serial =
      timed([&] { serial_value = hamq::exhaustive_average_accuracy(12, 3, attack, {0}, false); });
  const double t_enum_parallel =
      timed([&] { parallel_value = hamq::exhaustive_average_accuracy(12, 3, attack, {0}, true); });

  std::printf("enumeration (small k=3 over all 3^12 hidden sequences)\n");
  std::printf("  serial   %8.3f s\n", t_enum_serial);
  std::printf("  parallel %8.3f s   speedup %.2fx   values identical: %s\n", t_enum_parallel,
              t_enum_serial / t_enum_parallel, serial_value == parallel_value ? "yes" : "NO");

  return (sweep_equal && serial_value == parallel_value) ? 0 : 1;
}
