#include <benchmark/benchmark.h>

#include <memory>

#include "depthkit/frobenius.hpp"
#include "depthkit/perm_group.hpp"
#include "depthkit/tower.hpp"
#include "depthkit/tower_verify.hpp"

using namespace depthkit;

namespace {

Tower s2_in_s3() {
  auto g = std::make_shared<PermGroup const>(PermGroup::generate(
      3, {Permutation::parse_cycles("(1 2)", 3), Permutation::parse_cycles("(1 2 3)", 3)}));
  auto h = PermGroup::generate(3, {Permutation::parse_cycles("(1 2)", 3)});
  return Tower(FrobeniusSystem::standard(g, h));
}

// Product of the units at a level: every basis word meets every other.
void BM_TowerMultiplyUnits(benchmark::State& state) {
  auto const tower = s2_in_s3();
  auto const u = tower.unit(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tower.multiply(u, u));
}
BENCHMARK(BM_TowerMultiplyUnits)->DenseRange(1, 5);

void BM_TowerMultiplyWords(benchmark::State& state) {
  auto const tower = s2_in_s3();
  auto const words = tower.basis(static_cast<std::size_t>(state.range(0)));
  auto const a = tower.normalize_word(words[words.size() / 3]);
  auto const b = tower.normalize_word(words[words.size() / 2]);
  for (auto _ : state) benchmark::DoNotOptimize(tower.multiply(a, b));
}
BENCHMARK(BM_TowerMultiplyWords)->DenseRange(1, 6);

void BM_VerifyRelations(benchmark::State& state) {
  auto const tower = s2_in_s3();
  VerifyOptions const opts{static_cast<std::size_t>(state.range(0)), 0, 10000};
  for (auto _ : state) benchmark::DoNotOptimize(verify_relations(tower, opts));
}
BENCHMARK(BM_VerifyRelations)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

}  // namespace
