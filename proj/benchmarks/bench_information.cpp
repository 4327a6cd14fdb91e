#include <benchmark/benchmark.h>

#include "qbet/divergence.hpp"
#include "qbet/entropy.hpp"
#include "qbet/random_instances.hpp"

using namespace qbet;

static void BM_renyi_entropy(benchmark::State& state) {
  RandomSource rs(1);
  Pmf p = random_pmf_full_support(rs, state.range(0));
  Order a(2.0);
  for (auto _ : state) benchmark::DoNotOptimize(renyi_entropy(p, a));
}
BENCHMARK(BM_renyi_entropy)->Arg(4)->Arg(16)->Arg(64);

static void BM_arimoto_mi(benchmark::State& state) {
  RandomSource rs(2);
  JointPmf j = random_joint_pmf(rs, state.range(0), state.range(0), true);
  Order a(-2.0);
  for (auto _ : state) benchmark::DoNotOptimize(arimoto_mi(j, a));
}
BENCHMARK(BM_arimoto_mi)->Arg(2)->Arg(4)->Arg(8);

static void BM_renyi_div(benchmark::State& state) {
  RandomSource rs(3);
  Pmf p = random_pmf_full_support(rs, 8);
  Pmf q = random_pmf_full_support(rs, 8);
  Order a(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(renyi_div(p, q, a));
}
BENCHMARK(BM_renyi_div);

static void BM_sibson_mi_closed_form(benchmark::State& state) {
  RandomSource rs(4);
  CondPmf ch = random_cond_pmf(rs, 4, 4);
  Pmf p = random_pmf_full_support(rs, 4);
  Order a(2.0);
  for (auto _ : state) benchmark::DoNotOptimize(sibson_mi_closed_form(ch, p, a));
}
BENCHMARK(BM_sibson_mi_closed_form);

static void BM_variant_mi_blp(benchmark::State& state) {
  RandomSource rs(5);
  JointPmf j = random_joint_pmf(rs, 3, 3, true);
  VariantMiOptions opts;
  for (auto _ : state) benchmark::DoNotOptimize(variant_mi(CrdVariant::BLP, j, Order(2.0), opts));
}
BENCHMARK(BM_variant_mi_blp);

static void BM_renyi_capacity(benchmark::State& state) {
  RandomSource rs(6);
  CondPmf ch = random_cond_pmf(rs, state.range(0), state.range(0));
  CapacityOptions opts;
  for (auto _ : state) benchmark::DoNotOptimize(renyi_capacity(ch, Order(2.0), opts));
}
BENCHMARK(BM_renyi_capacity)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
