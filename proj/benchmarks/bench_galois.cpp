#include <benchmark/benchmark.h>

#include "gq/gq.hpp"

using namespace gq;

namespace {

  void BM_UclCycle(benchmark::State& state) {
    auto const   k = static_cast<std::size_t>(state.range(0));
    Monoid const m = principal_monoid(cycle_map(Universe(k)));
    for (auto _ : state) {
      benchmark::DoNotOptimize(ucl(m));
    }
  }
  BENCHMARK(BM_UclCycle)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

  void BM_IsUclosedTrivial(benchmark::State& state) {
    Monoid const m = trivial_monoid(Universe(static_cast<std::size_t>(state.range(0))));
    for (auto _ : state) {
      benchmark::DoNotOptimize(is_uclosed(m));
    }
  }
  BENCHMARK(BM_IsUclosedTrivial)->DenseRange(3, 7);

  // Arguments: k, arity.
  void BM_StarMembers(benchmark::State& state) {
    auto const   k = static_cast<std::size_t>(state.range(0));
    auto const   n = static_cast<std::size_t>(state.range(1));
    std::vector<OpTable> gens{cycle_map(Universe(k))};
    Monoid const m = monoid_generate(Universe(k), gens);
    for (auto _ : state) {
      benchmark::DoNotOptimize(count_star_members(m, n));
    }
  }
  BENCHMARK(BM_StarMembers)->Args({3, 2})->Args({3, 3})->Args({4, 3})->Args({5, 3});

  void BM_Census(benchmark::State& state) {
    auto const k = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(census_counts(k));
    }
  }
  BENCHMARK(BM_Census)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

  void BM_XiTournament(benchmark::State& state) {
    std::vector<Tuple> t;
    for (Element i = 0; i < 5; ++i) {
      for (Element j = 0; j < 5; ++j) {
        if (j <= i + 1 && j + 1 != i) {
          t.push_back({i, j});
        }
      }
    }
    RelationSet const q(Universe(5), {Relation(Universe(5), 2, t)});
    for (auto _ : state) {
      benchmark::DoNotOptimize(xi_check(q, 2));
    }
  }
  BENCHMARK(BM_XiTournament)->Unit(benchmark::kMillisecond);

}  // namespace
