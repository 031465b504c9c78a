#include <random>

#include <benchmark/benchmark.h>

#include "relsemi/partition.hpp"
#include "relsemi/relation.hpp"

using namespace relsemi;

namespace {
  BinaryRelation random_relation(std::size_t n, double density, std::uint64_t seed) {
    std::mt19937_64             rng(seed);
    std::bernoulli_distribution coin(density);
    BinaryRelation              r(n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (coin(rng)) {
          r.insert(x, y);
        }
      }
    }
    return r;
  }
}  // namespace

static void BM_compose(benchmark::State& state) {
  auto const n = static_cast<std::size_t>(state.range(0));
  auto const a = random_relation(n, 0.1, 1);
  auto const b = random_relation(n, 0.1, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compose(a, b));
  }
}
BENCHMARK(BM_compose)->Arg(4)->Arg(16)->Arg(64)->Arg(256);

static void BM_refinement(benchmark::State& state) {
  auto const n      = static_cast<std::size_t>(state.range(0));
  auto const coarse = Partition::one_block(n);
  auto const fine   = Partition::singletons(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_refinement(fine, coarse));
    benchmark::DoNotOptimize(is_refinement_by_relations(fine, coarse));
  }
}
BENCHMARK(BM_refinement)->Arg(16)->Arg(128);

static void BM_enumerate_partitions(benchmark::State& state) {
  auto const m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    std::size_t         count = 0;
    PartitionEnumerator e(m, m);
    for (; !e.done(); e.advance()) {
      ++count;
    }
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_enumerate_partitions)->Arg(9)->Arg(12);
