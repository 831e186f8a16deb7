#include <benchmark/benchmark.h>

#include "wordcomp/linrep.hpp"

using namespace wordcomp;

namespace {

LinearRep rs_rep() {
  LinearRep r;
  r.dim = 4;
  r.lambda = {1, 0, 0, 0};
  r.mu = {IntMat{{1, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}},
          IntMat{{0, 0, 1, 0}, {0, 0, 1, 0}, {0, 0, -1, 1}, {0, 0, 0, 1}}};
  r.gamma = {0, 0, 0, 1};
  return r;
}

}  // namespace

static void BM_Evaluate(benchmark::State& state) {
  LinearRep r = rs_rep();
  Digits digits(32);
  for (std::size_t i = 0; i < digits.size(); ++i) digits[i] = (i * 7 + 3) & 1;
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(r, digits));
}
BENCHMARK(BM_Evaluate);

static void BM_Minimize(benchmark::State& state) {
  LinearRep r = rs_rep();
  for (auto _ : state) benchmark::DoNotOptimize(minimize(r).dim);
}
BENCHMARK(BM_Minimize);

static void BM_SemigroupTrick(benchmark::State& state) {
  LinearRep r = rs_rep();
  for (auto _ : state) {
    SemigroupResult result = semigroup_trick(r, 100);
    benchmark::DoNotOptimize(result.states_generated);
  }
}
BENCHMARK(BM_SemigroupTrick);
