#include <benchmark/benchmark.h>

#include "puiseux/constructions.hpp"
#include "puiseux/cyclic.hpp"
#include "puiseux/fg_monoid.hpp"
#include "puiseux/numerical_semigroup.hpp"
#include "puiseux/primes.hpp"

using namespace puiseux;

namespace {

// Frobenius of <2^k, 3^k>; the residue table has 2^k entries.
void BM_FrobeniusPowers(benchmark::State& state) {
  const auto k = static_cast<std::uint64_t>(state.range(0));
  NumericalSemigroup s({pow(Integer(2), k), pow(Integer(3), k)});
  for (auto _ : state) benchmark::DoNotOptimize(frobenius(s));
}
BENCHMARK(BM_FrobeniusPowers)->DenseRange(4, 16, 4);

void BM_FrobeniusMcNugget(benchmark::State& state) {
  NumericalSemigroup s({6, 9, 20});
  for (auto _ : state) benchmark::DoNotOptimize(frobenius(s));
}
BENCHMARK(BM_FrobeniusMcNugget);

void BM_Representations(benchmark::State& state) {
  NumericalSemigroup s({4, 9});
  const Integer x = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(representations(s, x));
}
BENCHMARK(BM_Representations)->Arg(121)->Arg(1331)->Arg(14641);

void BM_FgFactorizations(benchmark::State& state) {
  FgMonoid m = FgMonoid::parse("1/2,2/3,3/5,5/7");
  const Rational x(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(factorizations(m, x));
}
BENCHMARK(BM_FgFactorizations)->Arg(2)->Arg(4)->Arg(8);

void BM_CyclicFactorizations(benchmark::State& state) {
  const auto cap = static_cast<std::uint64_t>(state.range(0));
  const auto r = PositiveRational::make(2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(cyclic_factorizations(r, Rational(4, 3), cap));
}
BENCHMARK(BM_CyclicFactorizations)->DenseRange(2, 8, 2);

void BM_DenseAtomMonoid(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dense_atom_monoid(rseq::CalkinWilf{}, 1, n));
}
BENCHMARK(BM_DenseAtomMonoid)->Arg(25)->Arg(100);

void BM_KPrimaryWitness(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(kprimary_antimatter_witness({7, 11, 13}, 100000));
  }
}
BENCHMARK(BM_KPrimaryWitness);

void BM_NthPrime(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nth_prime(n));
}
BENCHMARK(BM_NthPrime)->Arg(1000)->Arg(100000);

}  // namespace
BENCHMARK_MAIN();
