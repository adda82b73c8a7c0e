#include <benchmark/benchmark.h>

#include "roughalg/ideals.hpp"
#include "roughalg/search.hpp"
#include "roughalg/sweep.hpp"

using namespace roughalg;

namespace {

Exec exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Exec::serial : Exec::parallel;
}

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

// x*y = x - y mod n; a B-algebra with many ideals and congruences.
FiniteAlgebra cyclic(std::size_t n) {
  std::vector<Element> t(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) t[x * n + y] = static_cast<Element>((x + n - y) % n);
  }
  return FiniteAlgebra(n, std::move(t), 0);
}

void BM_EnumerateBH(benchmark::State& state) {
  SearchSpec spec;
  spec.order = 4;
  spec.axioms = {AxiomId::C1, AxiomId::C2, AxiomId::C4};
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_algebras(spec, {}, exec_of(state)));
  label(state);
}
BENCHMARK(BM_EnumerateBH)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_EnumerateBO5(benchmark::State& state) {
  SearchSpec spec;
  spec.order = 5;
  spec.axioms = {AxiomId::C1, AxiomId::C2, AxiomId::C5};
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_algebras(spec, {}, exec_of(state)));
  label(state);
}
BENCHMARK(BM_EnumerateBO5)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SweepPawlak(benchmark::State& state) {
  SweepSpec spec;
  spec.order = 6;
  spec.laws = law_group("2-1");
  for (auto _ : state) benchmark::DoNotOptimize(sweep_laws(spec, exec_of(state)).tallies.size());
  label(state);
}
BENCHMARK(BM_SweepPawlak)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SweepProducts(benchmark::State& state) {
  SweepSpec spec;
  spec.algebra = cyclic(6);
  spec.laws = law_group("3-2");
  spec.scope = RelationScope::congruences;
  for (auto _ : state) benchmark::DoNotOptimize(sweep_laws(spec, exec_of(state)).tallies.size());
  label(state);
}
BENCHMARK(BM_SweepProducts)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_StrongIdeals(benchmark::State& state) {
  const FiniteAlgebra alg = cyclic(16);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_ideals(alg, IdealKind::strong, exec_of(state)).size());
  }
  label(state);
}
BENCHMARK(BM_StrongIdeals)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Congruences(benchmark::State& state) {
  const FiniteAlgebra alg = cyclic(6);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_congruences(alg, exec_of(state)).size());
  label(state);
}
BENCHMARK(BM_Congruences)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
