// Serial reference vs OpenMP path for the data-parallel kernels.
#include <benchmark/benchmark.h>

#include "dirac_rm/oracle.hpp"
#include "dirac_rm/wavefunctions.hpp"

using namespace dirac_rm;

namespace {

ModelConfig model() {
  ModelConfig m;
  m.mass = 5.0;
  m.symmetry = Symmetry::spin(0.0);
  m.params = PotentialParams::rosen_morse(4.0, 1.0, 1.0);
  return m;
}

Exec exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Exec::serial : Exec::parallel;
}

void BM_OracleScan(benchmark::State& state) {
  const ModelConfig cfg = model();
  OracleConfig ocfg = OracleConfig::full_line(15.0, 2000);
  ocfg.scan_points = 64;
  for (auto _ : state) {
    benchmark::DoNotOptimize(self_consistent_scan(cfg, ocfg, 0, exec_of(state)));
  }
}

void BM_Eigenvalues(benchmark::State& state) {
  const ModelConfig cfg = model();
  const auto op = discretize(effective_coefficients(cfg, 1.6), 1.0,
                             OracleConfig::full_line(15.0, 6000));
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues(op, 32, exec_of(state)));
}

void BM_SpectrumScan(benchmark::State& state) {
  const ModelConfig cfg = model();
  for (auto _ : state) benchmark::DoNotOptimize(scan_residual(cfg, 0, 16000, exec_of(state)));
}

void BM_SampleSpinor(benchmark::State& state) {
  const ModelConfig cfg = model();
  const BoundState s = solve_energy(cfg, 1).back();
  const Grid grid = full_line_grid(1.0, 20001);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_spinor(cfg, s, grid, WaveMode::corrected, exec_of(state)));
  }
}

}  // namespace

BENCHMARK(BM_OracleScan)->Arg(0)->Arg(1)->ArgNames({"parallel"})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Eigenvalues)->Arg(0)->Arg(1)->ArgNames({"parallel"})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SpectrumScan)->Arg(0)->Arg(1)->ArgNames({"parallel"})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampleSpinor)->Arg(0)->Arg(1)->ArgNames({"parallel"})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
