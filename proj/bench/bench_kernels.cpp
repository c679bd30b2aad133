#include <benchmark/benchmark.h>
#include <omp.h>

#include "pdiff/counting.hpp"
#include "pdiff/oracle.hpp"
#include "pdiff/orientation.hpp"

using namespace pdiff;

namespace {

void BM_OracleSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_p2_configurations_serial(n).count());
}

void BM_OracleParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_p2_configurations(n).count());
  state.counters["threads"] = omp_get_max_threads();
}

void BM_OrientationsSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_p2_orientations_serial(n).size());
}

void BM_OrientationsParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_p2_orientations(n).size());
  state.counters["threads"] = omp_get_max_threads();
}

void BM_DirectSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_T_direct_serial(n));
}

void BM_DirectParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_T_direct(n));
}

void BM_WindowedTriangle(benchmark::State& state) {
  const SimpleGraph triangle(3, {{1, 2}, {2, 3}, {1, 3}});
  const auto g = build_bridge_graph(triangle, 1, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_p2_windowed(g, g.vertex_count(), 4));
}

}  // namespace

BENCHMARK(BM_OracleSerial)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleParallel)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OrientationsSerial)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OrientationsParallel)->Arg(12)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DirectSerial)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DirectParallel)->Arg(12)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WindowedTriangle)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
