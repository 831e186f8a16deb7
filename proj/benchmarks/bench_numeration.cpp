#include <benchmark/benchmark.h>

#include "wordcomp/numeration.hpp"

using namespace wordcomp;

static void BM_GreedyRep(benchmark::State& state) {
  PositionalSystem sys = state.range(0) == 0 ? PositionalSystem::tribonacci()
                                             : PositionalSystem::base(3);
  sys.u_values(64);
  std::uint64_t n = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sys.rep(n));
    n = (n + 997) % 1'000'000;
  }
}
BENCHMARK(BM_GreedyRep)->Arg(0)->Arg(1);

static void BM_RepValRoundTrip(benchmark::State& state) {
  PositionalSystem sys = PositionalSystem::tribonacci();
  std::uint64_t n = 0;
  for (auto _ : state) {
    Digits d = sys.rep(n);
    benchmark::DoNotOptimize(sys.val(d));
    n = (n + 1'009) % 10'000'000;
  }
}
BENCHMARK(BM_RepValRoundTrip);

BENCHMARK_MAIN();
