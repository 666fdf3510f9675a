// Serial references against the OpenMP kernels.

#include <benchmark/benchmark.h>

#include "brieskorn/search.hpp"
#include "brieskorn/signature.hpp"

using namespace brieskorn;

namespace {

const ExponentTuple kSeven{79, 13, 6, 3, 3};
const ExponentTuple kEleven{72 * 496 + 1, 9, 8, 8, 8, 8, 8};

void BM_SignatureNaive(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(signature_counts_naive(kSeven));
}
BENCHMARK(BM_SignatureNaive)->Unit(benchmark::kMillisecond);

void BM_SignatureFastSerial(benchmark::State& state) {
  const ExponentTuple& a = state.range(0) == 7 ? kSeven : kEleven;
  for (auto _ : state) benchmark::DoNotOptimize(signature_counts_fast_serial(a));
}
BENCHMARK(BM_SignatureFastSerial)->Arg(7)->Arg(11)->Unit(benchmark::kMillisecond);

void BM_SignatureFastParallel(benchmark::State& state) {
  const ExponentTuple& a = state.range(0) == 7 ? kSeven : kEleven;
  CountOptions opts;
  opts.jobs = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(signature_counts_fast(a, opts));
}
BENCHMARK(BM_SignatureFastParallel)->ArgsProduct({{7, 11}, {1, 2, 4}})->Unit(benchmark::kMillisecond);

void BM_SearchSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(search_exotic_spheres_serial(1, state.range(0)));
}
BENCHMARK(BM_SearchSerial)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_SearchParallel(benchmark::State& state) {
  SearchOptions opts;
  opts.jobs = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(search_exotic_spheres(1, state.range(0), opts));
}
BENCHMARK(BM_SearchParallel)->ArgsProduct({{30}, {1, 2, 4}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
