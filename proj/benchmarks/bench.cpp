#include <benchmark/benchmark.h>

#include <random>

#include "bbt/eio.hpp"
#include "bbt/temporal.hpp"
#include "bbt/testsetup.hpp"

using namespace bbt;

namespace {

SystemModel random_poset(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i)
    ids.push_back("e" + std::to_string(1000 + i));
  std::bernoulli_distribution edge(0.1);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j)
      if (edge(rng)) pairs.emplace_back(ids[i], ids[j]);
    pairs.emplace_back(ids[0], ids[i + 1]);
    pairs.emplace_back(ids[i], ids[n - 1]);
  }
  return SystemModel::from_pairs(ids, pairs, ids.front(), ids.back());
}

void BM_closure_dense(benchmark::State& state) {
  std::mt19937_64 rng(1);
  SystemModel model = random_poset(rng, static_cast<std::size_t>(state.range(0)));
  Bits r(model.size());
  for (std::size_t i = 0; i < model.size(); i += 3) r.set(i);
  for (auto _ : state) {
    benchmark::DoNotOptimize(model.upward(r));
    benchmark::DoNotOptimize(model.downward(r));
  }
}
BENCHMARK(BM_closure_dense)->Arg(64)->Arg(256)->Arg(1024);

void BM_closure_subset(benchmark::State& state) {
  EioUniverse u = build_universe(static_cast<int>(state.range(0)));
  Bits r(u.model.size());
  for (std::size_t i = 0; i < u.model.size(); i += 3) r.set(i);
  for (auto _ : state) {
    benchmark::DoNotOptimize(u.model.upward(r));
    benchmark::DoNotOptimize(u.model.downward(r));
  }
}
BENCHMARK(BM_closure_subset)->Arg(2)->Arg(3)->Arg(4);

void BM_refutability_eio(benchmark::State& state) {
  EioUniverse u = build_universe(static_cast<int>(state.range(0)));
  TestSetup t1 = tk_setup(u, 1);
  Requirement det = builtin_requirement(u, "determinism");
  for (auto _ : state)
    benchmark::DoNotOptimize(is_refutable(u.model, t1, det).holds);
}
BENCHMARK(BM_refutability_eio)->Arg(2)->Arg(3);

void BM_tstar_build(benchmark::State& state) {
  TemporalUniverse u = build_temporal_universe(
      "ab", 1, 1, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tstar_setup(u).obs_ids.size());
}
BENCHMARK(BM_tstar_build)->Arg(2)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
