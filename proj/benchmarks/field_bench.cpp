#include <benchmark/benchmark.h>

#include "ffsmooth/bounds.hpp"
#include "ffsmooth/gf.hpp"

using namespace ffsmooth;

static void BM_FieldMul(benchmark::State& state) {
  auto F = gf::make_field_of_order(static_cast<u64>(state.range(0)));
  const u64 q = F->q();
  gf::Elem acc = 1;
  for (auto _ : state) {
    for (u64 a = 1; a < q; ++a) acc = F->mul(acc, static_cast<gf::Elem>(a));
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(q - 1));
}
BENCHMARK(BM_FieldMul)->Arg(7)->Arg(64)->Arg(125)->Arg(251);

static void BM_FieldInv(benchmark::State& state) {
  auto F = gf::make_field_of_order(static_cast<u64>(state.range(0)));
  for (auto _ : state)
    for (u64 a = 1; a < F->q(); ++a) benchmark::DoNotOptimize(F->inv(static_cast<gf::Elem>(a)));
}
BENCHMARK(BM_FieldInv)->Arg(64)->Arg(251);

static void BM_ExactInequality(benchmark::State& state) {
  const auto which = static_cast<Inequality>(state.range(0));
  for (auto _ : state)
    for (unsigned r = 2; r < 60; ++r) benchmark::DoNotOptimize(inequality(which, 5, r));
}
BENCHMARK(BM_ExactInequality)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);
