#include <benchmark/benchmark.h>

#include <vector>

#include "avq/chow.hpp"
#include "avq/feasibility.hpp"
#include "avq/sequences.hpp"
#include "avq/trunc_series.hpp"

namespace {

void BM_FClosed(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(avq::f_closed(d));
  }
}
BENCHMARK(BM_FClosed)->Arg(10)->Arg(100)->Arg(1000);

void BM_FSeries(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(avq::f_series(d));
  }
}
BENCHMARK(BM_FSeries)->Arg(10)->Arg(100);

void BM_SeriesInvert(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  std::vector<avq::Int> coeffs(static_cast<std::size_t>(order) + 1, 1);
  const avq::TruncSeries s(std::move(coeffs), order);
  for (auto _ : state) {
    benchmark::DoNotOptimize(s.invert());
  }
}
BENCHMARK(BM_SeriesInvert)->Arg(16)->Arg(64)->Arg(256);

void BM_CircleSolutions(benchmark::State& state) {
  const avq::Int f = avq::f_closed(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(avq::circle_solutions(f));
  }
}
BENCHMARK(BM_CircleSolutions)->Arg(5)->Arg(7)->Arg(9);

void BM_Eliminate(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(avq::eliminate(d));
  }
}
BENCHMARK(BM_Eliminate)->Arg(2)->Arg(3)->Arg(50);

void BM_Table(benchmark::State& state) {
  const int max_d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::vector<avq::EliminationRecord> records;
    records.reserve(static_cast<std::size_t>(max_d));
    for (int d = 1; d <= max_d; ++d) {
      records.push_back(avq::eliminate(d));
    }
    benchmark::DoNotOptimize(records);
  }
}
BENCHMARK(BM_Table)->Arg(20)->Arg(100);

void BM_Fine(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(avq::fine(n));
  }
}
BENCHMARK(BM_Fine)->Arg(12)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
