#include <random>

#include <benchmark/benchmark.h>

#include <schlicht/caratheodory.hpp>
#include <schlicht/geometry.hpp>
#include <schlicht/series.hpp>
#include <schlicht/zoo.hpp>

namespace {

using schlicht::complex;
using schlicht::TruncatedSeries;

TruncatedSeries random_series(int order, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<complex> c(order + 1);
  for (auto& x : c) x = {u(rng), u(rng)};
  return TruncatedSeries(std::move(c));
}

void BM_Multiply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto a = random_series(n, 1);
  const auto b = random_series(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(schlicht::multiply(a, b));
  state.SetComplexityN(n);
}
BENCHMARK(BM_Multiply)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_Compose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto outer = random_series(n, 3);
  auto inner = random_series(n, 4);
  inner = inner + (-inner[0]);
  for (auto _ : state) benchmark::DoNotOptimize(schlicht::compose(outer, inner));
  state.SetComplexityN(n);
}
BENCHMARK(BM_Compose)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void BM_FromStarlike(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto h = schlicht::sample(7, 5, n);
  for (auto _ : state) benchmark::DoNotOptimize(schlicht::from_starlike(h));
}
BENCHMARK(BM_FromStarlike)->RangeMultiplier(4)->Range(16, 1024);

void BM_LocalUnivalenceRadius(benchmark::State& state) {
  const auto f = schlicht::AnalyticMap::from_named(schlicht::named_function(schlicht::FunctionTag::TheoremAExtremal, 64));
  for (auto _ : state) benchmark::DoNotOptimize(schlicht::local_univalence_radius(f, 1e-6));
}
BENCHMARK(BM_LocalUnivalenceRadius)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
