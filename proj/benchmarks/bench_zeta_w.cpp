#include <benchmark/benchmark.h>

#include <complex>

#include "zws/exact_poly.hpp"
#include "zws/integrals.hpp"
#include "zws/reflection.hpp"
#include "zws/scan.hpp"
#include "zws/special_functions.hpp"
#include "zws/zeta_w.hpp"

namespace {

void BM_ZetaW(benchmark::State& state) {
  const zws::TruncationIndex n(state.range(0));
  const zws::ComplexValue s(0.5, 14.134725);
  for (auto _ : state) benchmark::DoNotOptimize(zws::zeta_w(n, s));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ZetaW)->RangeMultiplier(10)->Range(10, 100000);

void BM_Chi(benchmark::State& state) {
  const zws::TruncationIndex n(state.range(0));
  const zws::ComplexValue s(0.3, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(zws::chi(n, s));
}
BENCHMARK(BM_Chi)->RangeMultiplier(10)->Range(10, 10000);

void BM_ResidueClosedForm(benchmark::State& state) {
  const zws::TruncationIndex n(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zws::residue_chi_at_0(n));
}
BENCHMARK(BM_ResidueClosedForm)->Arg(177)->Arg(10000)->Arg(100000);

void BM_ResidueScan(benchmark::State& state) {
  auto opts = zws::default_scan_options(zws::ScanKind::residue0);
  opts.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zws::run_scan(opts));
}
BENCHMARK(BM_ResidueScan)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_IntegralUnit(benchmark::State& state) {
  const zws::TruncationIndex n(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zws::integral_unit(n));
}
BENCHMARK(BM_IntegralUnit)->Arg(5)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_ExpIntegralE1(benchmark::State& state) {
  const zws::ComplexValue t(state.range(0) == 0 ? 1.5 : 8.0, 3.0);
  for (auto _ : state) benchmark::DoNotOptimize(zws::exp_integral_e1(t));
}
BENCHMARK(BM_ExpIntegralE1)->Arg(0)->Arg(1);

void BM_Table(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(zws::zeta_w_neg_table(12));
}
BENCHMARK(BM_Table)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
