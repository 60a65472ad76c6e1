#include <benchmark/benchmark.h>

#include <random>

#include "sra/modular.hpp"
#include "sra/singular.hpp"

using namespace sra;

static void BM_Product(benchmark::State& state) {
  auto alg = Algebra::create(AlgebraParams::odd(static_cast<int>(state.range(0)), Rational(1, 3)));
  AlgElem x = alg->gen(Letter::a0) + alg->gen(Letter::b1) * alg->group(GroupElem::R(alg->params().n, 1));
  AlgElem y = alg->gen(Letter::b0) * alg->gen(Letter::a1) + alg->L(0);
  for (auto _ : state) {
    AlgElem p = x * y * x * y;
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_Product)->Arg(3)->Arg(5)->Arg(7);

static void BM_TraceEval(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto spec = degenerate_family(n, 1, DegenerateFamily::integer(1));
  auto alg = spec.algebra();
  AlgElem w = alg->one();
  for (int i = 0; i < 4; ++i) w = w * (alg->gen(Letter::a0) + alg->gen(Letter::b1));
  for (int i = 0; i < 4; ++i) w = w * (alg->gen(Letter::b0) + alg->gen(Letter::a1));
  trace_eval(spec, w);  // fills the trace table
  for (auto _ : state) benchmark::DoNotOptimize(trace_eval(spec, w));
}
BENCHMARK(BM_TraceEval)->Arg(3)->Arg(5)->Arg(7);

static void BM_SPowerTrace(benchmark::State& state) {
  auto spec = degenerate_family(5, -1, DegenerateFamily::integer(2));
  int j = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(s_power_trace(spec, j, 1));
}
BENCHMARK(BM_SPowerTrace)->DenseRange(0, 6, 2);

static void BM_Solve147(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_147(n, 1, Rational(1, n)));
}
BENCHMARK(BM_Solve147)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_EvenSystem(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_even_system(m, Rational(1), Rational(1, 2)));
}
BENCHMARK(BM_EvenSystem)->Arg(2)->Arg(3)->Arg(4);

static void BM_NullCandidates(benchmark::State& state) {
  auto spec = degenerate_family(static_cast<int>(state.range(0)), 1, DegenerateFamily::integer(1));
  for (auto _ : state) benchmark::DoNotOptimize(null_vector_candidates(spec));
}
BENCHMARK(BM_NullCandidates)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_Gram(benchmark::State& state) {
  auto spec = degenerate_family(3, 1, DegenerateFamily::integer(1));
  int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gram_matrix(spec, d));
}
BENCHMARK(BM_Gram)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);
// Random 40 x 40 matrix over Q(zeta_7) of rank 39.
static CycloMatrix rank_deficient() {
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> c(-9, 9), k(0, 6);
  CycloMatrix a(40, 39), b(39, 40);
  for (int i = 0; i < 40; ++i)
    for (int j = 0; j < 39; ++j) {
      a.at(i, j) = CycloNum(c(rng)) * CycloNum::root_of_unity(7, k(rng));
      b.at(j, i) = CycloNum(c(rng)) * CycloNum::root_of_unity(7, k(rng));
    }
  return a * b;
}

static void BM_KernelExact(benchmark::State& state) {
  auto m = rank_deficient();
  for (auto _ : state) benchmark::DoNotOptimize(solve_exact(m, std::vector<CycloNum>(m.rows())));
}
BENCHMARK(BM_KernelExact)->Unit(benchmark::kMillisecond);

static void BM_KernelModular(benchmark::State& state) {
  auto m = rank_deficient();
  for (auto _ : state) benchmark::DoNotOptimize(modular_kernel(m));
}
BENCHMARK(BM_KernelModular)->Unit(benchmark::kMillisecond);

static void BM_GramKernel(benchmark::State& state) {
  auto spec = degenerate_family(5, -1, DegenerateFamily::integer(7));
  int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gram_kernel(spec, 3, d));
}
BENCHMARK(BM_GramKernel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
