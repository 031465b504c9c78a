#include <benchmark/benchmark.h>

#include "relsemi/generation.hpp"
#include "relsemi/represent.hpp"

using namespace relsemi;

static void BM_search_right_zero(benchmark::State& state) {
  auto const    m = static_cast<std::size_t>(state.range(0));
  auto const    h = right_zero_semigroup(m);
  SearchOptions o;
  o.max_ground = m;
  for (auto _ : state) {
    benchmark::DoNotOptimize(search_d_transitive(h, o));
  }
}
BENCHMARK(BM_search_right_zero)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

// Three-element closure of {diagonal, complement} on 3 points: exhausted.
static void BM_search_exhaust(benchmark::State& state) {
  auto const q = LabeledPartition::from_relations(
      3, {BinaryRelation::diagonal(3), BinaryRelation::diagonal(3).complement()});
  auto const    h = from_blocks(q).abstract();
  SearchOptions o;
  o.max_ground = static_cast<std::size_t>(state.range(0));
  o.threads    = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(search_d_transitive(h, o));
  }
}
BENCHMARK(BM_search_exhaust)->Args({3, 1})->Args({4, 1})->Args({4, 2})->Unit(benchmark::kMillisecond);
