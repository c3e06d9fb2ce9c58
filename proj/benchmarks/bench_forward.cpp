#include <benchmark/benchmark.h>

#include "emtrec/reconstruct.hpp"

using namespace emtrec;

namespace {

const MaterialPair kMaterials{LameConstants(1.5, 1.2), LameConstants(0.6, 0.4)};

void BM_FactorSolver(benchmark::State& state) {
  const BoundaryCurve curve(Kite{{0.6, 0.8}, 0.65}, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    TransmissionSolver solver(curve, kMaterials);
    benchmark::DoNotOptimize(solver.rcond());
  }
}
BENCHMARK(BM_FactorSolver)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_EmtTable(benchmark::State& state) {
  const BoundaryCurve curve(Kite{{0.6, 0.8}, 0.65}, 256);
  const TransmissionSolver solver(curve, kMaterials);
  for (auto _ : state) benchmark::DoNotOptimize(emt_table(solver, static_cast<int>(state.range(0))).max_abs());
}
BENCHMARK(BM_EmtTable)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_Reconstruct(benchmark::State& state) {
  const BoundaryCurve curve(Starfish{}, 256);
  const EmtTable table = emt_table(curve, kMaterials, 8);
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct(table, kMaterials, 8).coeffs.size());
}
BENCHMARK(BM_Reconstruct)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
