#include <benchmark/benchmark.h>

#include "ordcover/ordcover.hpp"

namespace {

using namespace ordcover;

void BM_ConstructQ2Bibd(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(construct_q2_bibd(q));
}
BENCHMARK(BM_ConstructQ2Bibd)->Arg(5)->Arg(13)->Arg(32)->Arg(49);

void BM_ValidateBibd(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  const Design d = construct_q2_bibd(q);
  for (auto _ : state) benchmark::DoNotOptimize(validate_bibd(d, q, 1));
}
BENCHMARK(BM_ValidateBibd)->Arg(5)->Arg(13)->Arg(32);

void BM_MolsComplete(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mols_complete(q));
}
BENCHMARK(BM_MolsComplete)->Arg(7)->Arg(16)->Arg(27);

void BM_AssignAndVerify(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const auto k = static_cast<std::uint64_t>(state.range(1));
  const auto instance = make_instance(n, k);
  for (auto _ : state) {
    const auto a = assign(instance);
    benchmark::DoNotOptimize(verify_cover(a).passed);
  }
}
BENCHMARK(BM_AssignAndVerify)->Args({54, 18})->Args({169, 13})->Args({512, 64});

void BM_MinCoverExact(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto k = static_cast<std::uint32_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::min_cover_exact(n, k));
}
BENCHMARK(BM_MinCoverExact)->Args({7, 3})->Args({9, 3})->Args({10, 4});

}  // namespace

BENCHMARK_MAIN();
