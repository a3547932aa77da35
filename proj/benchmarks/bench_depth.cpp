#include <benchmark/benchmark.h>

#include "depthkit/bigraph.hpp"
#include "depthkit/comb_depth.hpp"
#include "depthkit/depth.hpp"
#include "depthkit/partition.hpp"
#include "depthkit/perm_group.hpp"

using namespace depthkit;

namespace {

// Path-shaped inclusion matrix: k rows, k+1 columns, depth grows with k.
NonNegMatrix path_matrix(std::size_t k) {
  NonNegMatrix m(k, k + 1);
  for (std::size_t i = 0; i < k; ++i) {
    m.set(i, i, 1);
    m.set(i, i + 1, 1);
  }
  return m;
}

void BM_BracketedPower(benchmark::State& state) {
  auto const m = path_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bracketed_power(m, 2 * m.rows() + 1));
}
BENCHMARK(BM_BracketedPower)->RangeMultiplier(2)->Range(4, 64);

void BM_MinDepthPath(benchmark::State& state) {
  auto const m = path_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(min_depth(m));
}
BENCHMARK(BM_MinDepthPath)->RangeMultiplier(2)->Range(4, 64);

void BM_GraphDepthPath(benchmark::State& state) {
  auto const g = InclusionGraph::from_matrix(path_matrix(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(graph_depths(g));
}
BENCHMARK(BM_GraphDepthPath)->RangeMultiplier(2)->Range(4, 64);

void BM_SymDepth(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sym_depth(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_SymDepth)->DenseRange(2, 8);

void BM_CombDepthS3InS4(benchmark::State& state) {
  auto const g = PermGroup::generate(4, {Permutation::parse_cycles("(1 2)", 4),
                                         Permutation::parse_cycles("(1 2 3 4)", 4)});
  auto const h = PermGroup::generate(4, {Permutation::parse_cycles("(1 2)", 4),
                                         Permutation::parse_cycles("(1 2 3)", 4)});
  for (auto _ : state) benchmark::DoNotOptimize(combinatorial_depth(g, h));
}
BENCHMARK(BM_CombDepthS3InS4);

}  // namespace
