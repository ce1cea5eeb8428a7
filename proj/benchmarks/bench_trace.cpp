#include <benchmark/benchmark.h>

#include "yk/catalog.hpp"
#include "yk/invariants.hpp"

using namespace yk;

namespace {

const char* kWords[] = {
    "s1^6",
    "s1^3 s2^-1 s1 s2^-1",
    "s3^-1 s2 s1 s3 s2^-1 s3 s1 s2^2",
};

void BM_TraceNaive(benchmark::State& state) {
  BraidWord w = parse_braid(kWords[state.range(0)]);
  TraceEngine engine(2);
  for (auto _ : state)
    benchmark::DoNotOptimize(engine.trace_word(w, TraceStrategy::naive).value);
}
BENCHMARK(BM_TraceNaive)->DenseRange(0, 2);

void BM_TracePowerFormula(benchmark::State& state) {
  BraidWord w = parse_braid(kWords[state.range(0)]);
  TraceEngine engine(2);
  for (auto _ : state)
    benchmark::DoNotOptimize(engine.trace_word(w, TraceStrategy::power_formula).value);
}
BENCHMARK(BM_TracePowerFormula)->DenseRange(0, 2);

void BM_TraceMemoized(benchmark::State& state) {
  BraidWord w = parse_braid(kWords[state.range(0)]);
  TraceEngine engine(2);
  for (auto _ : state)
    benchmark::DoNotOptimize(engine.trace_word(w, TraceStrategy::memoized).value);
}
BENCHMARK(BM_TraceMemoized)->DenseRange(0, 2);

void BM_TraceGrowingModulus(benchmark::State& state) {
  BraidWord w = parse_braid("s1^3 s2^-1 s1 s2^-1");
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    TraceEngine engine(d);  // fresh engine: measures the cold cost per d
    benchmark::DoNotOptimize(engine.trace_word(w).value);
  }
}
BENCHMARK(BM_TraceGrowingModulus)->DenseRange(1, 4);

void BM_ThetaSpecialized(benchmark::State& state) {
  BraidWord w = parse_braid(kWords[state.range(0)]);
  TraceEngine engine(2, solve_esystem(2, {0, 1}));
  for (auto _ : state) benchmark::DoNotOptimize(theta(engine, w).value_str());
}
BENCHMARK(BM_ThetaSpecialized)->DenseRange(0, 2);

void BM_TransverseM(benchmark::State& state) {
  auto e = find_family("birman-menasco-a").instantiate({{"a", 2}, {"b", 2}, {"c", 3}});
  BraidWord w = e.braid();
  TraceEngine engine(2);
  for (auto _ : state)
    benchmark::DoNotOptimize(transverse_m(engine, w, TraceStrategy::power_formula).laurent());
}
BENCHMARK(BM_TransverseM);

}  // namespace
