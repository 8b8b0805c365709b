#include <benchmark/benchmark.h>

#include "qetude/closedform.hpp"
#include "qetude/lehmer.hpp"
#include "qetude/qseries.hpp"
#include "qetude/series.hpp"
#include "qetude/verifier.hpp"

namespace {

using namespace qetude;

void BM_DetRecurrence(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(det_recurrence(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_DetRecurrence)->Arg(20)->Arg(40)->Arg(80);

void BM_DetOracle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(det_oracle(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_DetOracle)->Arg(6)->Arg(9)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_GaussianPoly(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gaussian_poly(m, m));
}
BENCHMARK(BM_GaussianPoly)->Arg(5)->Arg(10)->Arg(20);

void BM_Theorem2Value(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(theorem2_value(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Theorem2Value)->Arg(20)->Arg(40);

void BM_SeriesInvert(benchmark::State& state) {
  auto order = static_cast<unsigned>(state.range(0));
  RationalSeries s = substitute_x(theorem1_truncated(order), 1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(series_invert(s));
}
BENCHMARK(BM_SeriesInvert)->Arg(20)->Arg(100)->Arg(400);

void BM_SolveCertificate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(solve_certificate(Recurrence::lehmer(), 4));
}
BENCHMARK(BM_SolveCertificate)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
