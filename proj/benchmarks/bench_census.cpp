#include <benchmark/benchmark.h>

#include "pencil/census.hpp"
#include "pencil/oracle.hpp"

namespace {

void BM_EnumeratePencils(benchmark::State& state) {
  pencil::EnumConfig cfg;
  cfg.field = pencil::Field(2);
  cfg.n = 4;
  cfg.k = 3;
  cfg.workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pencil::enumerate_pencils(cfg));
  state.SetItemsProcessed(state.iterations() * 4096);
}
BENCHMARK(BM_EnumeratePencils)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SquareFibers(benchmark::State& state) {
  pencil::EnumConfig cfg;
  cfg.n = cfg.k = 4;
  cfg.mode = pencil::CensusMode::Fiber;
  for (auto _ : state) benchmark::DoNotOptimize(pencil::enumerate_fibers(cfg));
}
BENCHMARK(BM_SquareFibers)->Unit(benchmark::kMillisecond);

void BM_PencilCensusClosedForm(benchmark::State& state) {
  const pencil::Field f(2);
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pencil::pencil_census(f, n, n));
}
BENCHMARK(BM_PencilCensusClosedForm)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_QIdentity(benchmark::State& state) {
  const mpz_class y(123456789);
  for (auto _ : state) benchmark::DoNotOptimize(pencil::check_q_identity(static_cast<unsigned>(state.range(0)), 3, y));
}
BENCHMARK(BM_QIdentity)->DenseRange(2, 8, 3);

}  // namespace
