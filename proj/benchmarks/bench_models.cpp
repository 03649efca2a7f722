#include <benchmark/benchmark.h>

#include "jamesian/curves.hpp"
#include "jamesian/generators.hpp"
#include "jamesian/james.hpp"
#include "jamesian/verify.hpp"

namespace {

void BM_JamesEval(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(jamesian::james_p(0.6, 0.4));
  }
}
BENCHMARK(BM_JamesEval);

void BM_LogitModelEval(benchmark::State& state) {
  const auto model = jamesian::jamesian_from_generator(
      jamesian::logit_generator());
  for (auto _ : state) {
    benchmark::DoNotOptimize(jamesian::evaluate(model, 0.6, 0.4));
  }
}
BENCHMARK(BM_LogitModelEval);

void BM_PowerModelEvalExact(benchmark::State& state) {
  const auto model = jamesian::jamesian_from_generator(
      jamesian::power_generator(2.0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(jamesian::evaluate(model, 0.6, 0.4));
  }
}
BENCHMARK(BM_PowerModelEvalExact);

void BM_PowerModelEvalCached(benchmark::State& state) {
  const auto model = jamesian::jamesian_from_generator(
      jamesian::power_generator_cached(2.0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(jamesian::evaluate(model, 0.6, 0.4));
  }
}
BENCHMARK(BM_PowerModelEvalCached);

void BM_McEstimate(benchmark::State& state) {
  const auto trials = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(jamesian::mc_estimate(0.6, 0.4, trials, 42));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_McEstimate)->Arg(1000)->Arg(100000);

void BM_CheckJamesConditions(benchmark::State& state) {
  const auto model = jamesian::james_model();
  for (auto _ : state) {
    benchmark::DoNotOptimize(jamesian::check_conditions(
        model, jamesian::ConditionList::James, 1.0 / 50, 1e-10));
  }
}
BENCHMARK(BM_CheckJamesConditions);

void BM_SampleLevelCurve(benchmark::State& state) {
  const auto model = jamesian::jamesian_from_generator(
      jamesian::power_generator_cached(2.0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        jamesian::sample_level_curve(model, 0.7, state.range(0)));
  }
}
BENCHMARK(BM_SampleLevelCurve)->Arg(101)->Arg(1001);

}  // namespace

BENCHMARK_MAIN();
