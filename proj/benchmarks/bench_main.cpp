#include <random>

#include <benchmark/benchmark.h>

#include "hitchin/burau.hpp"
#include "hitchin/fat_graph.hpp"
#include "hitchin/monodromy.hpp"
#include "hitchin/smith.hpp"
#include "hitchin/triangulation.hpp"

using namespace hitchin;

static void BM_SmithLiftedBoundary(benchmark::State& state) {
  const IntegerMatrix d1 = build_model(static_cast<int>(state.range(0))).lifted_surface.boundary_1();
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(d1));
}
BENCHMARK(BM_SmithLiftedBoundary)->DenseRange(3, 12, 3);

static void BM_SmithRandomDense(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> d(-9, 9);
  IntegerMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = d(rng);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithRandomDense)->RangeMultiplier(2)->Range(4, 32);

static void BM_BuildModel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_model(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BuildModel)->DenseRange(3, 12, 3);

static void BM_PairingMatrix(benchmark::State& state) {
  const HitchinModel m = build_model(static_cast<int>(state.range(0)));
  const PsiData psi = psi_map(m);
  for (auto _ : state) benchmark::DoNotOptimize(pairing_matrix(m, psi));
}
BENCHMARK(BM_PairingMatrix)->DenseRange(3, 12, 3);

static void BM_VerifyRelations(benchmark::State& state) {
  const MonodromyRep rep = build_rep(build_model(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(verify_relations(rep));
}
BENCHMARK(BM_VerifyRelations)->DenseRange(3, 8, 1)->Unit(benchmark::kMillisecond);

static void BM_PrymQuotient(benchmark::State& state) {
  const MonodromyRep rep = build_rep(build_model(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(prym_quotient(rep));
}
BENCHMARK(BM_PrymQuotient)->DenseRange(3, 8, 1)->Unit(benchmark::kMillisecond);

static void BM_FatGraphIsomorphism(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const GluedSurface a = contract_scheme(build_triangulation(g));
  const GluedSurface b = build_model(g).base_surface;
  for (auto _ : state) benchmark::DoNotOptimize(check_isomorphic(a, b));
}
BENCHMARK(BM_FatGraphIsomorphism)->DenseRange(3, 12, 3);

static void BM_BurauRelations(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const QuotientSpec spec = state.range(1) == 0 ? QuotientSpec::generic() : QuotientSpec::compact(3);
  for (auto _ : state) benchmark::DoNotOptimize(check_braid_relations(n, spec));
}
BENCHMARK(BM_BurauRelations)->ArgsProduct({{4, 6, 8}, {0, 1}});
BENCHMARK_MAIN();
