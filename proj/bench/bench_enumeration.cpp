#include <benchmark/benchmark.h>

#include <omp.h>

#include "sachs/enumeration.hpp"
#include "sachs/invariants.hpp"
#include "sachs/verify.hpp"

using namespace sachs;

namespace {

void enumerate_with(benchmark::State& state, int threads) {
  const EnumSpec spec{static_cast<int>(state.range(0))};
  std::uint64_t total = 0;
  for (auto _ : state) {
    total = 0;
    enumerate(spec, [&](const Graph& g) { total += g.size(); }, threads);
    benchmark::DoNotOptimize(total);
  }
  state.counters["graphs"] = static_cast<double>(count(spec, 1));
}

void BM_EnumerateSerial(benchmark::State& state) { enumerate_with(state, 1); }
void BM_EnumerateParallel(benchmark::State& state) { enumerate_with(state, 0); }

void search_with(benchmark::State& state, int threads) {
  const int n = static_cast<int>(state.range(0)), m = static_cast<int>(state.range(1));
  for (auto _ : state) {
    const auto r = extremal_search(n, m, GraphClass::general, threads);
    benchmark::DoNotOptimize(r.min_a4);
  }
}

void BM_SearchSerial(benchmark::State& state) { search_with(state, 1); }
void BM_SearchParallel(benchmark::State& state) { search_with(state, 0); }

}  // namespace

BENCHMARK(BM_EnumerateSerial)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchSerial)->Args({8, 11})->Args({9, 13})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchParallel)->Args({8, 11})->Args({9, 13})->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  benchmark::AddCustomContext("omp_max_threads", std::to_string(omp_get_max_threads()));
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
