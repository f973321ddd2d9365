#include <benchmark/benchmark.h>

#include "qeuler/characters.hpp"
#include "qeuler/euler.hpp"
#include "qeuler/integral.hpp"
#include "qeuler/lfun.hpp"
#include "qeuler/padicl.hpp"

using namespace qeuler;

static void BM_ClosedForm(benchmark::State& state) {
  const long n = state.range(0);
  const EulerParams<CycloExact> params(2, CycloExact(Rational(2, 3)), CycloExact::root_of_unity(1, 9));
  const auto table = exact_table(character_by_index(9, 1));
  for (auto _ : state) benchmark::DoNotOptimize(twisted_gen_euler_poly(n, Rational(1), table, params));
}
BENCHMARK(BM_ClosedForm)->Arg(2)->Arg(6)->Arg(12);

static void BM_RiemannSum(benchmark::State& state) {
  const long level = state.range(0);
  const PAdic q(3, 4L, 30);
  const PAdic one(3, 1L, 30);
  const auto f = [&](long x) { return (one - q.pow(x)) / (one - q); };
  for (auto _ : state) benchmark::DoNotOptimize(riemann_sum<PAdic>(f, q, level));
}
BENCHMARK(BM_RiemannSum)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_Witt(benchmark::State& state) {
  const EulerParams<PAdic> params(1, PAdic(3, 4L, 30), PAdic(3, 1L, 30));
  const auto table = embed_padic(character_by_index(3, 1), 3, 30);
  for (auto _ : state) benchmark::DoNotOptimize(witt_verify(2, 0, table, params, state.range(0)));
}
BENCHMARK(BM_Witt)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_LFunction(benchmark::State& state) {
  LfunParams lp;
  lp.q = Rational(2, 3);
  lp.alpha = 2;
  lp.chi = character_by_index(5, 2);
  const ComplexF s(0.5, static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(l_function(s, lp));
}
BENCHMARK(BM_LFunction)->Arg(0)->Arg(5);

static void BM_PLFunction(benchmark::State& state) {
  PlParams params;
  params.p = 5;
  params.q = Rational(6);
  params.F = 5;
  params.precision = state.range(0);
  const RegionTPoint s = RegionTPoint::padic(PAdic(5, Rational(1, 2), params.precision + 5));
  for (auto _ : state) benchmark::DoNotOptimize(p_l_function<PAdic>(s, params));
}
BENCHMARK(BM_PLFunction)->Arg(10)->Arg(20);

BENCHMARK_MAIN();
