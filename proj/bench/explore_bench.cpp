// Level-parallel explore_domain against the depth-first serial reference.
//
//   ptm_bench --benchmark_filter=Universal
//
// The thread argument is the OpenMP team size for the parallel variant.

#include <benchmark/benchmark.h>
#include <omp.h>

#include <random>

#include "ptm/enumeration.hpp"
#include "ptm/explore.hpp"
#include "ptm/table_machine.hpp"

namespace {

// A 4-state table that reads many bits before halting, so the tree is wide.
ptm::TableMachine wide_table() {
  return ptm::TableMachine::parse(
      "0 B -> read 1 2\n"
      "1 B -> read 2 3\n"
      "2 B -> read 3 0\n"
      "3 B -> write 1 move R goto 0\n"
      "3 1 -> halt\n");
}

void BM_UniversalSerial(benchmark::State& state) {
  const auto depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ptm::explore_domain_serial(ptm::universal_machine(), depth, 2000));
}

void BM_UniversalParallel(benchmark::State& state) {
  const auto depth = static_cast<std::size_t>(state.range(0));
  omp_set_num_threads(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(ptm::explore_domain(ptm::universal_machine(), depth, 2000));
}

void BM_TableSerial(benchmark::State& state) {
  const auto m = wide_table();
  const auto depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ptm::explore_domain_serial(m, depth, 10000));
}

void BM_TableParallel(benchmark::State& state) {
  const auto m = wide_table();
  const auto depth = static_cast<std::size_t>(state.range(0));
  omp_set_num_threads(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(ptm::explore_domain(m, depth, 10000));
}

}  // namespace

BENCHMARK(BM_UniversalSerial)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_UniversalParallel)->ArgsProduct({{14, 18}, {1, 2, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TableSerial)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TableParallel)->ArgsProduct({{12, 16}, {1, 2, 4}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
