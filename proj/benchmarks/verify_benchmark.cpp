#include <benchmark/benchmark.h>

#include <random>

#include "braidcover/families.hpp"
#include "braidcover/homology.hpp"
#include "braidcover/report.hpp"

using namespace braidcover;

static void BM_VerifyFamily(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_family(n).pass());
  }
}
BENCHMARK(BM_VerifyFamily)->DenseRange(2, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_BuildCover(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto s = family::build_surface(n);
  const auto rho = family::build_covering(n, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_cover(s, rho).cycles.size());
  }
}
BENCHMARK(BM_BuildCover)->DenseRange(2, 10, 2)->Unit(benchmark::kMicrosecond);

static void BM_BoundaryH1(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto p = build_cover(family::build_surface(n), family::build_covering(n, 1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(boundary_h1(p).torsion.size());
  }
}
BENCHMARK(BM_BoundaryH1)->DenseRange(2, 10, 2)->Unit(benchmark::kMicrosecond);

static void BM_SmithRandom(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> entry(-9, 9);
  IntMatrix a(size, size);
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) a(r, c) = entry(rng);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(smith_invariants(a).size());
  }
}
BENCHMARK(BM_SmithRandom)->RangeMultiplier(2)->Range(4, 16)->Unit(benchmark::kMicrosecond);

static void BM_Pullback(benchmark::State& state) {
  const auto rho = family::build_covering(4, 2);
  std::mt19937 rng(2);
  const int m = static_cast<int>(rho.branch_count());
  std::uniform_int_distribution<int> letter(1, m - 1);
  std::vector<int> letters;
  for (int k = 0; k < state.range(0); ++k) letters.push_back(k % 2 ? letter(rng) : -letter(rng));
  const BraidWord w(rho.branch_count(), letters);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pullback(rho, w).total().degree());
  }
}
BENCHMARK(BM_Pullback)->RangeMultiplier(4)->Range(16, 4096);
BENCHMARK_MAIN();
