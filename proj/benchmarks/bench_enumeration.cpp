#include <benchmark/benchmark.h>

#include "paramedial/enum_cyclic.hpp"
#include "paramedial/enum_gl2.hpp"
#include "paramedial/oracle.hpp"

using namespace paramedial;

static void BM_EnumerateGl2(benchmark::State& state) {
  const Int p = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_gl2(p).total);
}
BENCHMARK(BM_EnumerateGl2)->Arg(3)->Arg(5)->Arg(11)->Arg(23)->Unit(benchmark::kMillisecond);

static void BM_EnumerateCyclic(benchmark::State& state) {
  const Modulus m(3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_cyclic(m).count);
}
BENCHMARK(BM_EnumerateCyclic)->DenseRange(2, 10, 4)->Unit(benchmark::kMillisecond);

static void BM_SqrtSetScalar(benchmark::State& state) {
  const Modulus f(state.range(0));
  const Mat2 a = Mat2::scalar(4, f);
  for (auto _ : state) benchmark::DoNotOptimize(sqrt_set(a).size());
}
BENCHMARK(BM_SqrtSetScalar)->Arg(7)->Arg(31)->Arg(101);

static void BM_ClassifyTriples(benchmark::State& state) {
  const auto g = GroupDescriptor::elem2(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::classify_triples(g).count());
}
BENCHMARK(BM_ClassifyTriples)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_BurnsideTripleCount(benchmark::State& state) {
  const auto g = GroupDescriptor::elem2(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::burnside_triple_count(g, 121));
}
BENCHMARK(BM_BurnsideTripleCount)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
