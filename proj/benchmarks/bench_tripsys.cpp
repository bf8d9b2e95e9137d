#include <benchmark/benchmark.h>

#include <random>

#include "tripsys/enumerate.hpp"
#include "tripsys/families.hpp"
#include "tripsys/iso.hpp"
#include "tripsys/patterns.hpp"

using namespace tripsys;

static void BM_CanonicalForm(benchmark::State& state) {
  const FamilyName f = static_cast<FamilyName>(state.range(0));
  Hypergraph h = build(f, 9);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(h));
  state.SetLabel(to_string(f));
}
BENCHMARK(BM_CanonicalForm)
    ->Arg(static_cast<int>(FamilyName::kSn))
    ->Arg(static_cast<int>(FamilyName::kH2))
    ->Arg(static_cast<int>(FamilyName::kH6))
    ->Arg(static_cast<int>(FamilyName::kF7));

static void BM_ContainsC3(benchmark::State& state) {
  std::mt19937 rng(7);
  std::vector<Hypergraph> corpus;
  for (int i = 0; i < 64; ++i) {
    Hypergraph h(9);
    for (int r = 0; r < triple_count(9); ++r)
      if (rng() % 8 == 0) h.add(Triple::unrank(r));
    corpus.push_back(h);
  }
  for (auto _ : state)
    for (const auto& h : corpus) benchmark::DoNotOptimize(contains_c3(h));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus.size()));
}
BENCHMARK(BM_ContainsC3);

static void BM_CliqueEngine(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_maximal_intersecting(n));
}
BENCHMARK(BM_CliqueEngine)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_MisEngine(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<Pattern> forbidden =
      state.range(1) ? std::vector<Pattern>{Pattern::m2(), Pattern::c3()} : std::vector<Pattern>{Pattern::m2()};
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_maximal_free(n, forbidden));
}
BENCHMARK(BM_MisEngine)->Args({7, 0})->Args({7, 1})->Args({8, 1})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
