#include <benchmark/benchmark.h>

#include "ffsmooth/factor.hpp"
#include "ffsmooth/sequences.hpp"
#include "ffsmooth/verify.hpp"

using namespace ffsmooth;

static RingPtr ring_for(u64 q, int r) {
  auto F = gf::make_field_of_order(q);
  return make_ring(enumerate_irreducible_monic(F, r).front());
}

static void BM_ReachabilityVerify(benchmark::State& state) {
  auto ring = ring_for(static_cast<u64>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(reachability_verify(ring, false));
}
BENCHMARK(BM_ReachabilityVerify)->Args({2, 12})->Args({3, 8})->Args({5, 5})->Args({13, 3})->Unit(benchmark::kMillisecond);

static void BM_ScanVerify(benchmark::State& state) {
  auto ring = ring_for(static_cast<u64>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem(ring, {Algorithm::Scan, 1, false}));
}
BENCHMARK(BM_ScanVerify)->Args({3, 4})->Args({5, 3})->Unit(benchmark::kMillisecond);

static void BM_Plus1(benchmark::State& state) {
  auto F = gf::make_field_of_order(static_cast<u64>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(plus1_sequence(F, static_cast<std::size_t>(state.range(1)), 8));
}
BENCHMARK(BM_Plus1)->Args({2, 8})->Args({7, 30})->Unit(benchmark::kMillisecond);

static void BM_Explore(benchmark::State& state) {
  auto F = gf::make_field_of_order(3);
  for (auto _ : state) benchmark::DoNotOptimize(explore(F, {Poly::x(F)}, static_cast<unsigned>(state.range(0)), {}));
}
BENCHMARK(BM_Explore)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
