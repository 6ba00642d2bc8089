#include <benchmark/benchmark.h>

#include <random>

#include "peakstab/peakstab.hpp"

using namespace peakstab;

namespace {

PosetPtr fence(std::size_t r) { return shape_poset(standard_shape(ShapeKind::S3, r)); }

void BM_TypeAPosets(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(type_a_posets(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_TypeAPosets)->DenseRange(3, 6);

void BM_Indecomposables(benchmark::State& state) {
  PosetPtr p = fence(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_indecomposables(p));
}
BENCHMARK(BM_Indecomposables)->DenseRange(1, 6);

void BM_ThetaStability(benchmark::State& state) {
  PosetPtr p = fence(static_cast<std::size_t>(state.range(0)));
  auto all = enumerate_indecomposables(p);
  for (auto _ : state)
    for (const auto& u : all) benchmark::DoNotOptimize(is_theta_stable(u.space, theta_of(u)));
}
BENCHMARK(BM_ThetaStability)->DenseRange(1, 6);

void BM_SpSegments(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  auto qs = all_orientations(n);
  for (auto _ : state)
    for (const auto& q : qs) benchmark::DoNotOptimize(sp_segments(q, AlienSet{}));
}
BENCHMARK(BM_SpSegments)->DenseRange(4, 8, 2);

void BM_IncidenceInverse(benchmark::State& state) {
  std::mt19937_64 rng(1);
  Poset p = random_poset(static_cast<std::size_t>(state.range(0)), 0.3, rng);
  for (auto _ : state) benchmark::DoNotOptimize(incidence_matrix(p));
}
BENCHMARK(BM_IncidenceInverse)->RangeMultiplier(2)->Range(8, 64);

}  // namespace
BENCHMARK_MAIN();
