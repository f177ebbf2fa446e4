#include <benchmark/benchmark.h>

#include <diosum/diosum.hpp>

using namespace diosum;

namespace {

void BM_CfExpansion(benchmark::State& state) {
  const auto spec = IrrationalSpec::euler();
  for (auto _ : state) benchmark::DoNotOptimize(cf_data(spec, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_CfExpansion)->Arg(100)->Arg(1000)->Arg(10000);

void BM_CountFast(benchmark::State& state) {
  const auto spec = IrrationalSpec::sqrt2();
  const auto N = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_fast(spec, N, Rational(1, 7)));
}
BENCHMARK(BM_CountFast)->RangeMultiplier(100)->Range(100, 100000000);

void BM_CountBrute(benchmark::State& state) {
  const auto spec = IrrationalSpec::sqrt2();
  const auto N = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_dist_le(spec, N, Rational(1, 7)));
}
BENCHMARK(BM_CountBrute)->RangeMultiplier(10)->Range(100, 100000);

void BM_SumDist(benchmark::State& state) {
  const auto spec = IrrationalSpec::golden_ratio();
  const auto N = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sum_dist(spec, N, Rational(1, 2)));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * N));
}
BENCHMARK(BM_SumDist)->RangeMultiplier(10)->Range(1000, 1000000)->Unit(benchmark::kMillisecond);

void BM_SumHarmonic(benchmark::State& state) {
  const auto spec = IrrationalSpec::euler();
  const auto N = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sum_harmonic_dist(spec, N));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * N));
}
BENCHMARK(BM_SumHarmonic)->RangeMultiplier(10)->Range(1000, 1000000)->Unit(benchmark::kMillisecond);

void BM_DistNearest(benchmark::State& state) {
  const auto spec = IrrationalSpec::quadratic_surd(1, 5, 2);
  std::uint64_t n = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dist_nearest((n >> 24) + 1, spec));
    n = n * 6364136223846793005ull + 1442695040888963407ull;
  }
}
BENCHMARK(BM_DistNearest);

}  // namespace
BENCHMARK_MAIN();
