// Serial reference kernels against their OpenMP counterparts.

#include "pathstar/crossover.hpp"
#include "pathstar/oracle.hpp"

#include <benchmark/benchmark.h>

using namespace pathstar;

namespace {

const std::vector<SmallGraph> &parents(int n) {
  static std::vector<std::vector<SmallGraph>> levels(kOracleMaxOrder + 1);
  if (levels[n].empty())
    levels[n] = enumerate_graphs(n, Execution::Serial);
  return levels[n];
}

void BM_LevelSerial(benchmark::State &state) {
  const auto &p = parents(static_cast<int>(state.range(0)) - 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(extend_level_serial(p));
}

void BM_LevelParallel(benchmark::State &state) {
  const auto &p = parents(static_cast<int>(state.range(0)) - 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(extend_level_parallel(p));
}

CrossoverRequest scan_request(Count hi) {
  return {ScalarFormula::bracket_path(10, 5), ScalarFormula::linear(3, -5), 10, hi, 38, 0};
}

void BM_ScanSerial(benchmark::State &state) {
  const auto req = scan_request(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(crossover_scan_serial(req));
}

void BM_ScanParallel(benchmark::State &state) {
  const auto req = scan_request(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(crossover_scan(req));
}

void BM_OracleSerial(benchmark::State &state) {
  const auto spec = parse_spec("2P4");
  for (auto _ : state)
    benchmark::DoNotOptimize(turan_oracle(static_cast<int>(state.range(0)), spec, {.exec = Execution::Serial}));
}

void BM_OracleParallel(benchmark::State &state) {
  const auto spec = parse_spec("2P4");
  for (auto _ : state)
    benchmark::DoNotOptimize(turan_oracle(static_cast<int>(state.range(0)), spec, {.exec = Execution::Parallel}));
}

} // namespace

BENCHMARK(BM_LevelSerial)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LevelParallel)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanSerial)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanParallel)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleSerial)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleParallel)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
