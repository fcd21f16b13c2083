#include <benchmark/benchmark.h>

#include "weilform/eisenstein.hpp"
#include "weilform/obstruct.hpp"
#include "weilform/weilrep.hpp"

using namespace weilform;

static void BM_BuildF1(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_f1_level12(state.range(0)));
}
BENCHMARK(BM_BuildF1)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_EtaQuotient(benchmark::State& state) {
  const EtaSpec spec = h2_spec();
  for (auto _ : state) benchmark::DoNotOptimize(eta_quotient(spec, state.range(0)));
}
BENCHMARK(BM_EtaQuotient)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond);

static void BM_EEpsilonStar(benchmark::State& state) {
  const CharData c = CharData::from_n1(3);
  for (auto _ : state) benchmark::DoNotOptimize(e_epsilon_star(c, 2, state.range(0)));
}
BENCHMARK(BM_EEpsilonStar)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_RhoSPower(benchmark::State& state) {
  const WeilRepresentation W(DiscriminantForm::build(state.range(0)));
  const WeilMatrix S = W.rho_S();
  for (auto _ : state) benchmark::DoNotOptimize(S.power(4));
}
BENCHMARK(BM_RhoSPower)->Arg(2)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_RhoOfMatrix(benchmark::State& state) {
  const WeilRepresentation W(DiscriminantForm::build(3));
  const SL2Matrix M{13, 8, 21, 13};
  for (auto _ : state) benchmark::DoNotOptimize(W.rho(M));
}
BENCHMARK(BM_RhoOfMatrix)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
