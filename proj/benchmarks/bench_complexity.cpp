#include <benchmark/benchmark.h>

#include "wordcomp/classics.hpp"
#include "wordcomp/complexity.hpp"
#include "wordcomp/prefix_buffer.hpp"

using namespace wordcomp;

static void BM_FixedPointGeneration(benchmark::State& state) {
  std::size_t len = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    PrefixBuffer buf = PrefixBuffer::morphic(classics::tribonacci(), 0);
    benchmark::DoNotOptimize(buf.ensure(len).size());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(len));
}
BENCHMARK(BM_FixedPointGeneration)->Arg(1 << 16)->Arg(1 << 20);

static void BM_AdditiveScan(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  PrefixBuffer buf = PrefixBuffer::morphic(classics::tribonacci(), 0);
  Valuation id = buf.identity_valuation();
  std::size_t prefix = 1 << 20;
  buf.ensure(prefix);
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_at_prefix(buf, n, ComplexityKind::additive, &id, prefix));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(prefix));
}
BENCHMARK(BM_AdditiveScan)->Arg(16)->Arg(256);

static void BM_AbelianScan(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  PrefixBuffer buf = PrefixBuffer::morphic(classics::ternary_thue_morse(), 0);
  std::size_t prefix = 1 << 20;
  buf.ensure(prefix);
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_at_prefix(buf, n, ComplexityKind::abelian, nullptr, prefix));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(prefix));
}
BENCHMARK(BM_AbelianScan)->Arg(16)->Arg(256);

static void BM_AdditiveProfile(benchmark::State& state) {
  std::size_t n_max = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    PrefixBuffer buf = PrefixBuffer::morphic(classics::vtm(), 0);
    Valuation id = buf.identity_valuation();
    ComplexityProfile p = complexity_profile(buf, n_max, ComplexityKind::additive, id);
    benchmark::DoNotOptimize(p.values.back());
  }
}
BENCHMARK(BM_AdditiveProfile)->Arg(100)->Arg(500);
