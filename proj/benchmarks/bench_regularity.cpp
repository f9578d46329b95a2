#include <benchmark/benchmark.h>

#include "monreg/betti.hpp"
#include "monreg/dfixed.hpp"
#include "monreg/hilbert.hpp"
#include "monreg/regularity.hpp"

using namespace monreg;

namespace {

MonomialIdeal example_ideal() {
  const int n = 4;
  return MonomialIdeal(n, {Monomial(n, {7, 0, 0, 0}), Monomial(n, {5, 1, 0, 0}),
                           Monomial(n, {2, 4, 0, 0}), Monomial(n, {1, 6, 0, 0}),
                           Monomial(n, {5, 0, 2, 0}), Monomial(n, {1, 4, 2, 0})});
}

MonomialIdeal principal_ideal(int n, int power) {
  return principal_dfixed(Monomial::variable(n, n, power), DSequence({1, 2, 4}));
}

void BM_HilbertNumerator(benchmark::State& state) {
  auto I = principal_ideal(static_cast<int>(state.range(0)), 9);
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_numerator(I));
  state.counters["generators"] = static_cast<double>(I.size());
}
BENCHMARK(BM_HilbertNumerator)->DenseRange(2, 5);

void BM_ChainExample(benchmark::State& state) {
  auto I = example_ideal();
  for (auto _ : state) benchmark::DoNotOptimize(regularity_chain(I));
}
BENCHMARK(BM_ChainExample);

void BM_TruncationExample(benchmark::State& state) {
  auto I = example_ideal();
  for (auto _ : state) benchmark::DoNotOptimize(regularity_truncation(I));
}
BENCHMARK(BM_TruncationExample);

void BM_OracleExample(benchmark::State& state) {
  auto I = example_ideal();
  for (auto _ : state) benchmark::DoNotOptimize(regularity_betti(I));
}
BENCHMARK(BM_OracleExample)->Unit(benchmark::kMillisecond);

void BM_ChainPrincipal(benchmark::State& state) {
  auto I = principal_ideal(static_cast<int>(state.range(0)), 9);
  for (auto _ : state) benchmark::DoNotOptimize(regularity_chain(I));
}
BENCHMARK(BM_ChainPrincipal)->DenseRange(2, 5);

void BM_TruncationPrincipal(benchmark::State& state) {
  auto I = principal_ideal(static_cast<int>(state.range(0)), 9);
  for (auto _ : state) benchmark::DoNotOptimize(regularity_truncation(I));
}
BENCHMARK(BM_TruncationPrincipal)->DenseRange(2, 4);

}  // namespace

BENCHMARK_MAIN();
