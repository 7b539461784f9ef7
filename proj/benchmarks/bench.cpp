#include <random>

#include <benchmark/benchmark.h>

#include "howe/irreducible.hpp"
#include "howe/singular.hpp"

using namespace howe;

namespace {

RamificationData sample_data(const Field& k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_ramification(k, rng);
}

Field field_for(std::int64_t p) { return p == 0 ? Field::rational() : Field::prime(static_cast<std::uint64_t>(p)); }

}  // namespace

static void BM_BuildModel(benchmark::State& state) {
  const RamificationData rd = sample_data(field_for(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(build_model(rd));
}
BENCHMARK(BM_BuildModel)->Arg(31)->Arg(10007)->Arg(0);

static void BM_Classify(benchmark::State& state) {
  const RamificationData rd = sample_data(field_for(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(classify(rd));
}
BENCHMARK(BM_Classify)->Arg(31)->Arg(10007)->Arg(0);

static void BM_SingularPoints(benchmark::State& state) {
  const SexticModel m = build_model(sample_data(field_for(state.range(0)), 3));
  for (auto _ : state) benchmark::DoNotOptimize(singular_points(m, 0));
}
BENCHMARK(BM_SingularPoints)->Arg(31)->Arg(10007)->Arg(0);

static void BM_Irreducibility(benchmark::State& state) {
  const RamificationData rd = sample_data(field_for(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(is_absolutely_irreducible(rd));
}
BENCHMARK(BM_Irreducibility)->Arg(31)->Arg(10007)->Arg(0);

static void BM_BruteForceScan(benchmark::State& state) {
  const SexticModel m = build_model(sample_data(field_for(state.range(0)), 5));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_singular_scan(m.F, 1000000, static_cast<unsigned>(state.range(1))));
}
BENCHMARK(BM_BruteForceScan)->Args({31, 1})->Args({97, 1})->Args({97, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
