#include <benchmark/benchmark.h>

#include "zeck/hankel.hpp"
#include "zeck/kernels.hpp"
#include "zeck/minimality.hpp"

using namespace zeck;

namespace {

const char* kSignature = "3,1,2";

void BM_GzdBatchSerial(benchmark::State& state) {
  auto seq = make_sequence(parse_signature(kSignature));
  const auto values = iota_values(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::gzd_batch(seq, values));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_GzdBatchParallel(benchmark::State& state) {
  auto seq = make_sequence(parse_signature(kSignature));
  const auto values = iota_values(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(parallel::gzd_batch(seq, values));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SweepSerial(benchmark::State& state) {
  auto seq = make_sequence(parse_signature("4,3,2"));
  for (auto _ : state) benchmark::DoNotOptimize(least_non_minimal_serial(seq, state.range(0)));
}

void BM_SweepParallel(benchmark::State& state) {
  auto seq = make_sequence(parse_signature("4,3,2"));
  for (auto _ : state) benchmark::DoNotOptimize(least_non_minimal(seq, state.range(0)));
}

void BM_DivisibilitySerial(benchmark::State& state) {
  const auto f = char_poly(parse_signature("1,0,2,2,2,1,1"));
  for (auto _ : state) benchmark::DoNotOptimize(serial::g_divisibility_hits(f, static_cast<int>(state.range(0))));
}

void BM_DivisibilityParallel(benchmark::State& state) {
  const auto f = char_poly(parse_signature("1,0,2,2,2,1,1"));
  for (auto _ : state) benchmark::DoNotOptimize(parallel::g_divisibility_hits(f, static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_GzdBatchSerial)->Arg(2000)->Arg(20000);
BENCHMARK(BM_GzdBatchParallel)->Arg(2000)->Arg(20000);
BENCHMARK(BM_SweepSerial)->Arg(2000)->Arg(20000);
BENCHMARK(BM_SweepParallel)->Arg(2000)->Arg(20000);
BENCHMARK(BM_DivisibilitySerial)->Arg(20)->Arg(40);
BENCHMARK(BM_DivisibilityParallel)->Arg(20)->Arg(40);

BENCHMARK_MAIN();
