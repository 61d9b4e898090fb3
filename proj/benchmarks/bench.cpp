#include <benchmark/benchmark.h>

#include <paratrace/hochschild.hpp>
#include <paratrace/trace.hpp>

#include <random>

using namespace paratrace;

namespace {

LabeledCircle make_circle(std::size_t r, std::size_t d) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> dist(-3, 3);
  LabeledCircle lc{from_para(ParaObj{r}), canonical_duality(d, ExactRing::Q()), {}};
  for (std::size_t a = 0; a < r; ++a) {
    ExactMatrix m(ExactRing::Q(), d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) m.set(i, j, Rat(dist(rng)));
    lc.arc_labels.push_back(m);
  }
  return lc;
}

void bm_evaluate_pipeline(benchmark::State& state) {
  LabeledCircle lc = make_circle(static_cast<std::size_t>(state.range(0)),
                                 static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(lc));
}
BENCHMARK(bm_evaluate_pipeline)->Args({2, 2})->Args({3, 2})->Args({3, 3})->Args({4, 2});

void bm_evaluate_contracted(benchmark::State& state) {
  LabeledCircle lc = make_circle(static_cast<std::size_t>(state.range(0)),
                                 static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_contracted(lc));
}
BENCHMARK(bm_evaluate_contracted)->Args({3, 3})->Args({6, 4})->Args({10, 8});

void bm_hochschild_b(benchmark::State& state) {
  HochschildComplex hc(truncated_polynomial(3, ExactRing::Q()));
  auto p = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hc.b(p));
}
BENCHMARK(bm_hochschild_b)->Arg(2)->Arg(3)->Arg(4);

void bm_hh_ranks(benchmark::State& state) {
  AlgebraSC a = truncated_polynomial(2, ExactRing::Q());
  auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hh_ranks(a, n));
}
BENCHMARK(bm_hh_ranks)->Arg(2)->Arg(3)->Arg(4);

void bm_hh_ranks_integral(benchmark::State& state) {
  AlgebraSC a = cyclic_group_algebra(2, ExactRing::Z());
  for (auto _ : state) benchmark::DoNotOptimize(hh_ranks(a, 3));
}
BENCHMARK(bm_hh_ranks_integral);

void bm_poincare_dual(benchmark::State& state) {
  auto maps = enumerate_maps(ParaObj{4}, ParaObj{4}, 2);
  for (auto _ : state)
    for (const ParaMap& f : maps) benchmark::DoNotOptimize(poincare_dual(f));
}
BENCHMARK(bm_poincare_dual);

void bm_hochschild_diagram(benchmark::State& state) {
  AlgebraSC a = truncated_polynomial(2, ExactRing::Q());
  ParaMap f{ParaObj{4}, ParaObj{4}, {-1, 1, 2, 3}};
  for (auto _ : state) benchmark::DoNotOptimize(hochschild_diagram(a, f));
}
BENCHMARK(bm_hochschild_diagram);

}  // namespace

BENCHMARK_MAIN();
