#include <benchmark/benchmark.h>

#include "tdn/enumerate.hpp"
#include "tdn/genfunc.hpp"
#include "tdn/motive.hpp"
#include "tdn/pairing.hpp"
#include "tdn/presentation.hpp"

namespace {

void BM_Poincare(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto p = tdn::poincare(d, n);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_Poincare)->Args({1, 8})->Args({3, 10});

void BM_VerifyFunctional(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto r = tdn::verify_functional(d, 8);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_VerifyFunctional)->Arg(1)->Arg(3);

void BM_CountStrata(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto c = tdn::count_strata(n);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_CountStrata)->Arg(5)->Arg(6)->Arg(7);

void BM_GradedRanks(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) {
    tdn::RingPresentation p(d, n);
    int total = 0;
    for (int k = 0; k <= p.top_degree(); ++k) total += p.rank(k);
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_GradedRanks)->Args({1, 5})->Args({2, 3})->Args({2, 4})
    ->Unit(benchmark::kMillisecond);

void BM_PairingTable(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) {
    tdn::RingPresentation p(d, n);
    auto t = tdn::pairing_table(p);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_PairingTable)->Args({1, 5})->Args({2, 3})
    ->Unit(benchmark::kMillisecond);

void BM_TdnRanks(benchmark::State& state) {
  for (auto _ : state) {
    auto r = tdn::tdn_ranks(3, 8);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_TdnRanks);

}  // namespace

BENCHMARK_MAIN();
