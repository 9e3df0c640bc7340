#include <benchmark/benchmark.h>

#include <random>

#include "upinv/action.hpp"
#include "upinv/constructions.hpp"
#include "upinv/families.hpp"
#include "upinv/invariants.hpp"

namespace {

using namespace upinv;

void BM_ExampleClosure(benchmark::State& state) {
  const PrimeModulus p(state.range(0));
  const auto gens = example_generators(p);
  for (auto _ : state) benchmark::DoNotOptimize(MatrixGroup::closure(p, gens).order());
}
BENCHMARK(BM_ExampleClosure)->Arg(3)->Arg(5)->Arg(7)->Arg(11);

void BM_BorelClosure(benchmark::State& state) {
  const PrimeModulus p(state.range(0));
  const std::vector<Matrix3> gens{Matrix3(p, {{2, 1, 0}, {0, 1, 0}, {0, 0, 1}}),
                                  Matrix3(p, {{1, 0, 0}, {0, 2, 1}, {0, 0, 1}}),
                                  Matrix3(p, {{1, 0, 0}, {0, 1, 0}, {0, 0, 2}})};
  for (auto _ : state) benchmark::DoNotOptimize(MatrixGroup::closure(p, gens).order());
}
BENCHMARK(BM_BorelClosure)->Arg(3)->Arg(5)->Arg(7);

void BM_HilbertFunction(benchmark::State& state) {
  const auto g = example_group(PrimeModulus(3));
  const auto top = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_function(g, top).dims.back());
}
BENCHMARK(BM_HilbertFunction)->Arg(6)->Arg(12)->Arg(18)->Unit(benchmark::kMillisecond);

void BM_Falsifier(benchmark::State& state) {
  const auto g = example_group(PrimeModulus(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_falsify(g, 12).verdict);
}
BENCHMARK(BM_Falsifier)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_EffectiveNorm(benchmark::State& state) {
  const PrimeModulus p(state.range(0));
  const auto g = example_group(p);
  const auto f = Polynomial::linear(p, 1, 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(effective_norm(g, f).size());
}
BENCHMARK(BM_EffectiveNorm)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_SubstituteLinear(benchmark::State& state) {
  const PrimeModulus p(7);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> e(0, 6);
  const auto d = static_cast<std::uint32_t>(state.range(0));
  Polynomial f(p);
  for (const auto& m : monomial_basis(d)) f.add_term(m, static_cast<std::uint32_t>(e(rng)));
  const Matrix3 m(p, {{3, 1, 4}, {1, 5, 2}, {6, 5, 3}});
  for (auto _ : state) benchmark::DoNotOptimize(substitute_linear(f, m).size());
}
BENCHMARK(BM_SubstituteLinear)->RangeMultiplier(2)->Range(4, 32);

void BM_HsopCheck(benchmark::State& state) {
  const PrimeModulus p(state.range(0));
  const std::vector<std::int64_t> cs{0, 1};
  const auto g = construct_A(p, 0, cs);
  const auto fs = construct_A_invariants(p, 0, cs);
  for (auto _ : state) benchmark::DoNotOptimize(hsop_check(g, fs).certified());
}
BENCHMARK(BM_HsopCheck)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
