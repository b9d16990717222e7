#include <benchmark/benchmark.h>

#include "girthlab/analysis.hpp"
#include "girthlab/dseries.hpp"
#include "girthlab/field.hpp"
#include "girthlab/gdel.hpp"
#include "girthlab/geometry.hpp"

using namespace girthlab;

static void BM_field_mul(benchmark::State& state) {
  Field F = Field::make_order(uint32_t(state.range(0)));
  Scalar acc = 1;
  for (auto _ : state) {
    for (Scalar a = 1; a < F.q(); ++a) acc = F.mul(acc, a);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * (F.q() - 1));
}
BENCHMARK(BM_field_mul)->Arg(9)->Arg(81)->Arg(243);

static void BM_build_bipartite(benchmark::State& state) {
  Field F = Field::make_order(uint32_t(state.range(1)));
  for (auto _ : state) {
    Graph G = build_bipartite(DFamily::D, int(state.range(0)), F);
    benchmark::DoNotOptimize(G.num_edges());
  }
}
BENCHMARK(BM_build_bipartite)->Args({4, 5})->Args({6, 3})->Args({4, 9});

static void BM_build_triple_system(benchmark::State& state) {
  Field F = Field::make_order(3);
  for (auto _ : state) {
    TripleSystem H = build_triple_system(int(state.range(0)), F);
    benchmark::DoNotOptimize(H.num_edges());
  }
}
BENCHMARK(BM_build_triple_system)->Arg(3)->Arg(4);

static void BM_girth(benchmark::State& state) {
  Field F = Field::make_order(uint32_t(state.range(1)));
  Graph G = build_bipartite(DFamily::D, int(state.range(0)), F);
  for (auto _ : state) {
    GirthResult g = girth(G);
    benchmark::DoNotOptimize(g.value);
  }
}
BENCHMARK(BM_girth)->Args({3, 9})->Args({5, 3})->Unit(benchmark::kMillisecond);

static void BM_cycles_through_edge(benchmark::State& state) {
  Field F = Field::make_order(3);
  Graph G = build_bipartite(DFamily::D, 7, F);
  const uint32_t b0 = G.part_begin(1);
  for (auto _ : state) {
    uint64_t c = cycles_through_edge(G, 0, b0, 12);
    benchmark::DoNotOptimize(c);
  }
  state.SetLabel("L=12");
}
BENCHMARK(BM_cycles_through_edge)->Unit(benchmark::kMillisecond);

static void BM_link_of(benchmark::State& state) {
  Field F = Field::make_order(3);
  TripleSystem H = build_triple_system(int(state.range(0)), F);
  for (auto _ : state) {
    Graph L = link_of(H, 0);
    benchmark::DoNotOptimize(L.num_edges());
  }
}
BENCHMARK(BM_link_of)->Arg(3)->Arg(5);

static void BM_sample_g3(benchmark::State& state) {
  RationalPower rate = deletion_rate(2);
  rate.coeff = Rational(1, 2);
  const uint32_t n = uint32_t(state.range(0));
  uint64_t thr = threshold_from_rate(n, rate);
  for (auto _ : state) {
    TripleSystem H = sample_g3(n, thr, 7);
    benchmark::DoNotOptimize(H.num_edges());
  }
}
BENCHMARK(BM_sample_g3)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
