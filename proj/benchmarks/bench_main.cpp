#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "scarftree/collapse.hpp"
#include "scarftree/homology.hpp"
#include "scarftree/resolution.hpp"
#include "scarftree/scarf_ideals.hpp"

using namespace scarftree;

namespace {

// A chain of triangles {i, i+1, i+2}; a tree for every length. Forest
// checks enumerate subcollections, so lengths stay small.
SimplicialComplex triangle_path(int facets) {
  std::vector<std::vector<Vertex>> out;
  for (int i = 1; i <= facets; ++i) out.push_back({std::to_string(i), std::to_string(i + 1), std::to_string(i + 2)});
  return new_complex(out);
}

SimplicialComplex cycle(int n) {
  std::vector<std::vector<Vertex>> out;
  for (int i = 1; i <= n; ++i) out.push_back({std::to_string(i), std::to_string(i % n + 1)});
  return new_complex(out);
}

void BM_IsForest(benchmark::State& state) {
  const auto c = triangle_path(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_forest(c));
}
BENCHMARK(BM_IsForest)->DenseRange(4, 12, 4);

void BM_TreeCertificate(benchmark::State& state) {
  const auto c = triangle_path(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tree_collapse_certificate(c));
}
BENCHMARK(BM_TreeCertificate)->DenseRange(4, 16, 4);

void BM_ReducedHomology(benchmark::State& state) {
  const auto c = cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reduced_homology_ranks(c));
}
BENCHMARK(BM_ReducedHomology)->RangeMultiplier(2)->Range(8, 64);

void BM_ReducedHomologyModP(benchmark::State& state) {
  const auto c = cycle(static_cast<int>(state.range(0)));
  const auto field = FieldSpec::prime(32003);
  for (auto _ : state) benchmark::DoNotOptimize(reduced_homology_ranks(c, field));
}
BENCHMARK(BM_ReducedHomologyModP)->RangeMultiplier(2)->Range(8, 64);

void BM_BettiOfJ(benchmark::State& state) {
  const auto ideal = build_J(triangle_path(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(betti_table(ideal));
}
BENCHMARK(BM_BettiOfJ)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_ScarfComplex(benchmark::State& state) {
  const auto ideal = build_Jprime(triangle_path(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(scarf_complex(ideal));
}
BENCHMARK(BM_ScarfComplex)->DenseRange(2, 10, 4)->Unit(benchmark::kMillisecond);

void BM_SupportsTreeVsGeneral(benchmark::State& state) {
  const auto tree = triangle_path(static_cast<int>(state.range(0)));
  const auto labeled = make_labeled(tree, build_Jprime(tree));
  const bool fast = state.range(1) != 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fast ? supports_resolution_tree(labeled) : supports_resolution(labeled));
  }
}
BENCHMARK(BM_SupportsTreeVsGeneral)->ArgsProduct({{4, 8}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
