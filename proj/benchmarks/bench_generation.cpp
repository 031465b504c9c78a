#include <benchmark/benchmark.h>

#include "relsemi/classify.hpp"
#include "relsemi/generation.hpp"

using namespace relsemi;

static void BM_closure(benchmark::State& state) {
  auto const k    = static_cast<std::size_t>(state.range(0));
  auto const kind = static_cast<ProductKind>(state.range(1));
  auto const p    = Partition::singletons(k);
  for (auto _ : state) {
    benchmark::DoNotOptimize(from_partition(p, kind));
  }
}
BENCHMARK(BM_closure)->ArgsProduct({{3, 6, 10}, {0, 1, 2, 3}});

static void BM_classify_H1(benchmark::State& state) {
  auto const k = static_cast<std::size_t>(state.range(0));
  auto const h = from_partition(Partition::singletons(k), ProductKind::plain).abstract();
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_H1(h));
  }
}
BENCHMARK(BM_classify_H1)->Arg(3)->Arg(6);

static void BM_classify_HS(benchmark::State& state) {
  auto const k = static_cast<std::size_t>(state.range(0));
  auto const h = from_partition(Partition::singletons(k), ProductKind::sym).abstract();
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_HS(h));
  }
}
BENCHMARK(BM_classify_HS)->Arg(3)->Arg(6);

static void BM_isomorphism(benchmark::State& state) {
  auto const k = static_cast<std::size_t>(state.range(0));
  auto const a = adjoin_identity(from_partition(Partition::singletons(k), ProductKind::sym).abstract());
  auto const b = from_partition(Partition::singletons(k), ProductKind::sym_unit).abstract();
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_isomorphism(a, b));
  }
}
BENCHMARK(BM_isomorphism)->Arg(3)->Arg(5)->Arg(8);
