#include <benchmark/benchmark.h>

#include <random>

#include "yk/laurent.hpp"

using namespace yk;

namespace {

MultiLaurent dense_poly(int terms, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> exp(-6, 6), num(-9, 9), den(1, 4);
  MultiLaurent p({Var::q(), Var::z()});
  for (int i = 0; i < terms; ++i)
    p += MultiLaurent::monomial({Var::q(), Var::z()}, {exp(rng), exp(rng)},
                                Cyclotomic(Rational(num(rng), den(rng))));
  return p;
}

void BM_LaurentMul(benchmark::State& state) {
  MultiLaurent a = dense_poly(static_cast<int>(state.range(0)), 1);
  MultiLaurent b = dense_poly(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_LaurentMul)->Arg(8)->Arg(32)->Arg(128);

void BM_LaurentExactDivide(benchmark::State& state) {
  MultiLaurent mu = MultiLaurent::variable(Var::z()) - q_minus_qinv();
  MultiLaurent prod = dense_poly(static_cast<int>(state.range(0)), 3) * mu;
  for (auto _ : state) benchmark::DoNotOptimize(prod.exact_divide(mu, Var::z()));
}
BENCHMARK(BM_LaurentExactDivide)->Arg(8)->Arg(32)->Arg(128);

void BM_CyclotomicMul(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Cyclotomic a = Cyclotomic::zeta_power(d, 1) + Cyclotomic(Rational(2, 3));
  Cyclotomic b = Cyclotomic::zeta_power(d, d - 1) + Cyclotomic(Rational(5, 7));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CyclotomicMul)->Arg(3)->Arg(5)->Arg(12);

void BM_Serialization(benchmark::State& state) {
  MultiLaurent p = dense_poly(64, 4);
  for (auto _ : state) benchmark::DoNotOptimize(p.str());
}
BENCHMARK(BM_Serialization);

}  // namespace
