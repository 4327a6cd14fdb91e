#include <benchmark/benchmark.h>

#include "qbet/betting.hpp"
#include "qbet/games.hpp"
#include "qbet/random_instances.hpp"
#include "qbet/resource.hpp"

using namespace qbet;

static void BM_ice(benchmark::State& state) {
  RandomSource rs(1);
  JointPmf j = random_joint_pmf(rs, 4, 4, true);
  CondPmf b = random_cond_pmf(rs, 4, 4);
  Odds o = Odds::constant(4, 1.0);
  RiskParam r(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(ice(b, o, j, r));
}
BENCHMARK(BM_ice);

static void BM_optimal_strategy(benchmark::State& state) {
  RandomSource rs(2);
  JointPmf j = random_joint_pmf(rs, 4, 4, true);
  Odds o = Odds::constant(4, 1.0);
  RiskParam r(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(optimal_strategy(o, j, r));
}
BENCHMARK(BM_optimal_strategy);

static void BM_numeric_optimal_ice(benchmark::State& state) {
  RandomSource rs(3);
  JointPmf j = random_joint_pmf(rs, 3, 3, true);
  Odds o = Odds::constant(3, 1.0);
  RiskParam r(0.5);
  NumericIceOptions opts;
  for (auto _ : state) benchmark::DoNotOptimize(numeric_optimal_ice(o, j, r, opts));
}
BENCHMARK(BM_numeric_optimal_ice)->Unit(benchmark::kMicrosecond);

static void BM_born_cond_pmf(benchmark::State& state) {
  RandomSource rs(4);
  Povm m = random_povm(rs, 4, 6);
  StateSet s;
  for (int i = 0; i < 6; ++i) s.push_back(random_state(rs, 4));
  for (auto _ : state) benchmark::DoNotOptimize(born_cond_pmf(m, s));
}
BENCHMARK(BM_born_cond_pmf);

static void BM_robustness(benchmark::State& state) {
  RandomSource rs(5);
  Povm m = random_povm(rs, 4, 6);
  for (auto _ : state) benchmark::DoNotOptimize(robustness_informativeness(m));
}
BENCHMARK(BM_robustness);

static void BM_robustness_oracle(benchmark::State& state) {
  RandomSource rs(6);
  Povm m = random_povm(rs, 3, 4);
  for (auto _ : state) benchmark::DoNotOptimize(robustness_bisection_oracle(m));
}
BENCHMARK(BM_robustness_oracle)->Unit(benchmark::kMicrosecond);

static void BM_qsb_value(benchmark::State& state) {
  RandomInstance inst = random_instance(7, 2, 3, 3, 2);
  QsbGame game(Odds::constant(3, 1.0), inst.ensemble);
  Order a(2.0);
  for (auto _ : state) benchmark::DoNotOptimize(qsb_value(game, inst.povm, a));
}
BENCHMARK(BM_qsb_value);

BENCHMARK_MAIN();
