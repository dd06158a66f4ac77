#include <benchmark/benchmark.h>

#include <random>

#include "gq/gq.hpp"

using namespace gq;

namespace {

  Relation random_relation(std::size_t k, std::size_t m, double density, unsigned seed) {
    std::mt19937                rng(seed);
    std::bernoulli_distribution coin(density);
    std::vector<Code>           codes;
    for (std::size_t c = 0; c < checked_power(k, m); ++c) {
      if (coin(rng)) {
        codes.push_back(static_cast<Code>(c));
      }
    }
    return Relation::from_codes(Universe(k), m, std::move(codes));
  }

  // Arguments: k, arity.
  void BM_Partial(benchmark::State& state) {
    auto const     k   = static_cast<std::size_t>(state.range(0));
    auto const     m   = static_cast<std::size_t>(state.range(1));
    Relation const rho = random_relation(k, m, 0.3, 1);
    for (auto _ : state) {
      benchmark::DoNotOptimize(partial(rho));
    }
    state.counters["tuples"] = static_cast<double>(rho.size());
  }
  BENCHMARK(BM_Partial)->Args({3, 2})->Args({3, 3})->Args({4, 3})->Args({3, 4})->Args({5, 3});

  void BM_PartialNaive(benchmark::State& state) {
    auto const     m   = static_cast<std::size_t>(state.range(0));
    Relation const rho = random_relation(3, m, 0.3, 1);
    for (auto _ : state) {
      benchmark::DoNotOptimize(partial_naive(rho));
    }
  }
  BENCHMARK(BM_PartialNaive)->Arg(2)->Arg(3);

  void BM_GquordClosure(benchmark::State& state) {
    auto const     k   = static_cast<std::size_t>(state.range(0));
    Relation const rho = random_relation(k, 3, 0.02, 2);
    for (auto _ : state) {
      benchmark::DoNotOptimize(closure(rho, ClosureMode::gquord));
    }
  }
  BENCHMARK(BM_GquordClosure)->Arg(3)->Arg(4)->Arg(5);

  // Arguments: arity of f.
  void BM_Preserves(benchmark::State& state) {
    auto const        n = static_cast<std::size_t>(state.range(0));
    Universe const    u(4);
    Relation const    rho = closure(random_relation(4, 2, 0.1, 3), ClosureMode::gquord);
    std::mt19937      rng(4);
    std::vector<Element> t(checked_power(4, n));
    for (auto& x : t) {
      x = static_cast<Element>(rng() % 4);
    }
    OpTable const f(u, n, std::move(t));
    for (auto _ : state) {
      benchmark::DoNotOptimize(preserves(f, rho));
    }
  }
  BENCHMARK(BM_Preserves)->Arg(1)->Arg(2)->Arg(3);

  void BM_InvariantGquords(benchmark::State& state) {
    auto const           m = static_cast<std::size_t>(state.range(0));
    Universe const       u(3);
    std::vector<OpTable> gens{OpTable(u, 1, {0, 0, 2})};
    Monoid const         mon = monoid_generate(u, gens);
    for (auto _ : state) {
      benchmark::DoNotOptimize(invariant_gquords(mon, m));
    }
  }
  BENCHMARK(BM_InvariantGquords)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace
