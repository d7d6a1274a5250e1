#include <benchmark/benchmark.h>

#include <memory>

#include "gp/decompose.hpp"
#include "gp/oracle.hpp"
#include "gp/spectra.hpp"

namespace {

void BM_FieldBuild(benchmark::State& state) {
  const long p = state.range(0);
  const int m = static_cast<int>(state.range(1));
  for (auto _ : state) {
    gp::FiniteField f(p, m);
    benchmark::DoNotOptimize(f.omega_index());
  }
}
BENCHMARK(BM_FieldBuild)->Args({3, 4})->Args({2, 10})->Args({1021, 1});

void BM_GraphBuild(benchmark::State& state) {
  auto f = std::make_shared<gp::FiniteField>(3, 4);
  const long k = state.range(0);
  for (auto _ : state) {
    gp::GPGraph g(f, k);
    benchmark::DoNotOptimize(g.arc_count());
  }
}
BENCHMARK(BM_GraphBuild)->Arg(2)->Arg(20)->Arg(80);

void BM_Decompose(benchmark::State& state) {
  auto f = std::make_shared<gp::FiniteField>(3, 4);
  gp::GPGraph g(f, state.range(0));
  for (auto _ : state) {
    auto d = gp::decompose(g);
    benchmark::DoNotOptimize(d.params.component_count);
  }
}
BENCHMARK(BM_Decompose)->Arg(2)->Arg(20)->Arg(80);

void BM_CharacterSpectrum(benchmark::State& state) {
  auto f = std::make_shared<gp::FiniteField>(2, static_cast<int>(state.range(0)));
  gp::GPGraph g(f, 3);
  for (auto _ : state) {
    auto s = gp::character_spectrum(g);
    benchmark::DoNotOptimize(s.entries.size());
  }
}
BENCHMARK(BM_CharacterSpectrum)->Arg(4)->Arg(6)->Arg(8);

void BM_NumericSpectrum(benchmark::State& state) {
  auto f = std::make_shared<gp::FiniteField>(2, static_cast<int>(state.range(0)));
  gp::GPGraph g(f, 3);
  for (auto _ : state) {
    auto s = gp::numeric_spectrum(g);
    benchmark::DoNotOptimize(s.entries.size());
  }
}
BENCHMARK(BM_NumericSpectrum)->Arg(4)->Arg(6)->Arg(8);

void BM_Components(benchmark::State& state) {
  auto f = std::make_shared<gp::FiniteField>(3, 4);
  gp::oracle::DenseGraph dg(gp::GPGraph(f, 20));
  for (auto _ : state) {
    auto c = gp::oracle::components(dg, gp::oracle::ComponentMode::strong);
    benchmark::DoNotOptimize(c.size());
  }
}
BENCHMARK(BM_Components);

}  // namespace

BENCHMARK_MAIN();
