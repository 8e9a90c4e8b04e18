#include <benchmark/benchmark.h>

#include <random>

#include "eikq/analysis.hpp"
#include "eikq/classifier.hpp"
#include "eikq/constructors.hpp"
#include "eikq/normalform.hpp"
#include "eikq/pencil_search.hpp"

using namespace eikq;

static void BM_RadialPower(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(radial_power<Rational>(n, 3));
}
BENCHMARK(BM_RadialPower)->Arg(4)->Arg(8)->Arg(12);

static void BM_CheckEikonalPrimitive(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto f = make_primitive({6, n, n / 2});
  for (auto _ : state) benchmark::DoNotOptimize(check_eikonal(f, 6));
}
BENCHMARK(BM_CheckEikonalPrimitive)->Arg(4)->Arg(8)->Arg(10);

static void BM_SubstituteLinear(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  const auto u = random_cayley_orthogonal(n, rng);
  const auto f = make_canonical_quartic(n, n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(substitute_linear(f, u));
}
BENCHMARK(BM_SubstituteLinear)->Arg(4)->Arg(6)->Arg(8);

static void BM_ClassifyExact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto f = make_canonical_quartic(n, n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(classify(f));
}
BENCHMARK(BM_ClassifyExact)->Arg(4)->Arg(8);

static void BM_SphereMaximize(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto u = random_cayley_orthogonal(5, rng);
  const auto f = polynomial_cast<double>(substitute_linear(make_canonical_quartic(5, 2), u));
  for (auto _ : state) benchmark::DoNotOptimize(sphere_maximize(f));
}
BENCHMARK(BM_SphereMaximize)->Unit(benchmark::kMillisecond);

static void BM_SearchIsoparametric(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(search_isoparametric_pencil(3, 2, 1));
}
BENCHMARK(BM_SearchIsoparametric)->Unit(benchmark::kMillisecond)->Iterations(3);
BENCHMARK_MAIN();
