#include <benchmark/benchmark.h>

#include <random>

#include "bredonk/dataset.hpp"
#include "bredonk/khomology.hpp"

using namespace bredonk;

static IntegerMatrix random_matrix(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> dist(-9, 9);
  IntegerMatrix A(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) A(i, j) = dist(rng);
  return A;
}

static void BM_SnfRandom(benchmark::State& state) {
  const IntegerMatrix A = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(snf(A));
}
BENCHMARK(BM_SnfRandom)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static void BM_SnfAssembledPsi(benchmark::State& state) {
  const BredonComplex C = assemble(builtin_sl3z());
  const IntegerMatrix& psi = C.psi[static_cast<std::size_t>(state.range(0))];
  for (auto _ : state) benchmark::DoNotOptimize(snf(psi));
}
BENCHMARK(BM_SnfAssembledPsi)->DenseRange(1, 3);

static void BM_EnumerateS4(benchmark::State& state) {
  const std::vector<GroupElement> gens{*named_element("g2"), *named_element("g3")};
  for (auto _ : state) benchmark::DoNotOptimize(FiniteGroup::enumerate(gens));
}
BENCHMARK(BM_EnumerateS4);

static void BM_CharacterTable(benchmark::State& state) {
  const std::vector<std::vector<const char*>> sets = {{"g2"}, {"g6", "g8"}, {"g4", "g5"}, {"g2", "g3"}};
  std::vector<GroupElement> gens;
  for (const char* n : sets[static_cast<std::size_t>(state.range(0))]) gens.push_back(*named_element(n));
  const GroupPtr G = make_group(gens);
  state.SetLabel("order " + std::to_string(G->order()));
  for (auto _ : state) benchmark::DoNotOptimize(character_table(G));
}
BENCHMARK(BM_CharacterTable)->DenseRange(0, 3);

static void BM_Sl3zPipeline(benchmark::State& state) {
  const GCWComplex X = builtin_sl3z();
  for (auto _ : state) {
    const BredonComplex C = assemble(X);
    benchmark::DoNotOptimize(ahss_collapse(GradedHomology(bredon_homology(C))));
  }
}
BENCHMARK(BM_Sl3zPipeline)->Unit(benchmark::kMillisecond);

static void BM_Gl3zKunneth(benchmark::State& state) {
  const auto h = GradedHomology(bredon_homology(builtin_sl3z()));
  const auto c2 = GradedHomology(bredon_homology(builtin_c2point()));
  for (auto _ : state) benchmark::DoNotOptimize(kunneth(h, c2));
}
BENCHMARK(BM_Gl3zKunneth);

BENCHMARK_MAIN();
