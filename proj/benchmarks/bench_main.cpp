// Timings for the hot paths: straightening in A_n, the representation
// functor, coordinates in the elementary basis, and the g_lambda polynomials.

#include <benchmark/benchmark.h>

#include "qweb/normalform.hpp"
#include "qweb/polyring.hpp"
#include "qweb/qrep.hpp"
#include "qweb/sergeev.hpp"

using namespace qweb;

static void BM_Straighten(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::string text;
  for (int r = 0; r < 2; ++r)
    for (int i = 1; i < n; ++i) text += "x" + std::to_string(i) + " s" + std::to_string(i) + " c" + std::to_string(i + 1) + " ";
  auto w = parse_sergeev_word(text, n);
  for (auto _ : state) benchmark::DoNotOptimize(straighten(w, n));
}
BENCHMARK(BM_Straighten)->Arg(2)->Arg(3)->Arg(4);

static void BM_EvalMorphism(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Morphism f = chain({merge(1, 2), tensor(bdot(1), wdot(2)), split(1, 2)});
  for (auto _ : state) benchmark::DoNotOptimize(eval_morphism(f, n));
}
BENCHMARK(BM_EvalMorphism)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Reduce(benchmark::State& state) {
  const int a = static_cast<int>(state.range(0));
  Morphism f = chain({merge(1, a - 1), tensor(bdot(1), omega(a - 1, 1)), split(1, a - 1)});
  for (auto _ : state) benchmark::DoNotOptimize(reduce(f));
}
BENCHMARK(BM_Reduce)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_GLambda(benchmark::State& state) {
  const int a = static_cast<int>(state.range(0));
  Partition lam{a, a - 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(g_lambda(lam, 2, a, GMethod::Recursive));
    benchmark::DoNotOptimize(g_lambda(lam, 2, a, GMethod::Raising));
  }
}
BENCHMARK(BM_GLambda)->Arg(3)->Arg(4)->Arg(5);

static void BM_CfdBasis(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cfd_basis({2, 1}, {1, 2}, d));
}
BENCHMARK(BM_CfdBasis)->Arg(1)->Arg(2)->Arg(3);
BENCHMARK_MAIN();
