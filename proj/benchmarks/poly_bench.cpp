#include <benchmark/benchmark.h>

#include <random>

#include "ffsmooth/factor.hpp"

using namespace ffsmooth;

static Poly random_poly(const gf::FieldPtr& F, int degree, std::mt19937_64& rng) {
  Coeffs c(degree + 1);
  for (auto& x : c) x = static_cast<gf::Elem>(rng() % F->q());
  c.back() = 1;
  return Poly(F, c);
}

static void BM_PolyMul(benchmark::State& state) {
  auto F = gf::make_field_of_order(7);
  std::mt19937_64 rng(1);
  const Poly a = random_poly(F, static_cast<int>(state.range(0)), rng);
  const Poly b = random_poly(F, static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMul)->RangeMultiplier(4)->Range(8, 512);

static void BM_Factor(benchmark::State& state) {
  auto F = gf::make_field_of_order(static_cast<u64>(state.range(0)));
  std::mt19937_64 rng(2);
  std::vector<Poly> inputs;
  for (int i = 0; i < 16; ++i) inputs.push_back(random_poly(F, static_cast<int>(state.range(1)), rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(factor(inputs[i++ % inputs.size()]));
}
BENCHMARK(BM_Factor)->Args({2, 64})->Args({5, 32})->Args({9, 24})->Args({64, 16})->Unit(benchmark::kMicrosecond);

static void BM_EnumerateIrreducible(benchmark::State& state) {
  auto F = gf::make_field_of_order(3);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_irreducible_monic(F, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumerateIrreducible)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
