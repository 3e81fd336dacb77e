#include <benchmark/benchmark.h>

#include "gmcat/stock.hpp"

using namespace gmcat;

static void BM_CheckCategory_Product(benchmark::State& state) {
  FinCategory w = stock::walking_arrow();
  FinCategory c = w;
  for (int i = 1; i < state.range(0); ++i) c = product_category(c, w);
  for (auto _ : state) benchmark::DoNotOptimize(check_category(c));
}
BENCHMARK(BM_CheckCategory_Product)->Arg(1)->Arg(2)->Arg(3);

static void BM_CheckMonoidal_Chain(benchmark::State& state) {
  MonoidalStructure m = thin_from_semilattice(
      stock::chain(static_cast<std::size_t>(state.range(0)), "chain"), ThinArrows::up);
  for (auto _ : state) benchmark::DoNotOptimize(check_monoidal(m));
}
BENCHMARK(BM_CheckMonoidal_Chain)->Arg(2)->Arg(3)->Arg(4);

static void BM_CheckGradedMonad_Reader(benchmark::State& state) {
  CommutativeGradedMonad t = stock::reader_commutative();
  for (auto _ : state) benchmark::DoNotOptimize(check_graded_monad(t.underlying));
}
BENCHMARK(BM_CheckGradedMonad_Reader);

static void BM_CheckCommutative_Reader(benchmark::State& state) {
  CommutativeGradedMonad t = stock::reader_commutative();
  for (auto _ : state) benchmark::DoNotOptimize(check_commutative(t));
}
BENCHMARK(BM_CheckCommutative_Reader);

static void BM_BuildKleisli_Truncation(benchmark::State& state) {
  GradedMonad t = stock::truncation_graded();
  for (auto _ : state) benchmark::DoNotOptimize(build_kleisli(t));
}
BENCHMARK(BM_BuildKleisli_Truncation);

static void BM_EnumerateAlgebras_Reader(benchmark::State& state) {
  GradedMonad t = stock::reader_commutative().underlying;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_graded_algebras(t, 100000));
}
BENCHMARK(BM_EnumerateAlgebras_Reader);

BENCHMARK_MAIN();
