#include <benchmark/benchmark.h>

#include "phylocons/phylocons.hpp"

using namespace phylocons;

namespace {

Execution exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::kSerial : Execution::kParallel;
}

// k x n
const Profile& wide() {
  static const Profile p = random_profile(64, 512, 1);
  return p;
}
const Profile& tall() {
  static const Profile p = random_profile(512, 64, 2);
  return p;
}
const Profile& small() {
  static const Profile p = random_profile(32, 48, 3);
  return p;
}

void BM_MajorityPlus(benchmark::State& state) {
  const Profile& p = tall();
  for (auto _ : state) benchmark::DoNotOptimize(majority_plus_consensus(p, exec_of(state)));
}

void BM_WeightsBitvec(benchmark::State& state) {
  const Profile& p = tall();
  for (auto _ : state) benchmark::DoNotOptimize(node_weights_bitvec(p, exec_of(state)));
}

void BM_WeightsDay(benchmark::State& state) {
  const Profile& p = wide();
  for (auto _ : state) benchmark::DoNotOptimize(node_weights_day(p, exec_of(state)));
}

void BM_FreqDiff(benchmark::State& state) {
  const Profile& p = wide();
  for (auto _ : state) {
    benchmark::DoNotOptimize(frequency_difference_consensus(p, FilterImpl::kFast, WeightsMethod::kDay, nullptr, exec_of(state)));
  }
}

void BM_Census(benchmark::State& state) {
  const Profile& p = small();
  for (auto _ : state) benchmark::DoNotOptimize(census(p, exec_of(state)));
}

}  // namespace

BENCHMARK(BM_MajorityPlus)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WeightsBitvec)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WeightsDay)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FreqDiff)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Census)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
