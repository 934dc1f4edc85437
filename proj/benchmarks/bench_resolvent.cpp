#include <benchmark/benchmark.h>

#include "latgreen/fundamental_solutions.hpp"
#include "latgreen/oracles.hpp"
#include "latgreen/resolvent.hpp"

namespace {

using latgreen::Complex;
using latgreen::LatticePoint;

// Argument: |n| along the first axis.
LatticePoint point(const benchmark::State& state) { return {state.range(0), state.range(0) / 2}; }

void BM_Laurent2d(benchmark::State& state) {
  const LatticePoint n = point(state);
  for (auto _ : state) benchmark::DoNotOptimize(latgreen::green_laurent_2d(Complex(-2.0, 1.0), n));
}
BENCHMARK(BM_Laurent2d)->Arg(0)->Arg(4)->Arg(16);

void BM_LaurentShells(benchmark::State& state) {
  const LatticePoint n = point(state);
  for (auto _ : state) benchmark::DoNotOptimize(latgreen::green_laurent(2, Complex(-2.0, 1.0), n));
}
BENCHMARK(BM_LaurentShells)->Arg(0)->Arg(4)->Arg(16);

void BM_Embedded2d(benchmark::State& state) {
  const LatticePoint n = point(state);
  for (auto _ : state) benchmark::DoNotOptimize(latgreen::green_2d_embedded(Complex(4.0, 0.5), n));
}
BENCHMARK(BM_Embedded2d)->Arg(0)->Arg(4)->Arg(16);

void BM_Endpoint2d(benchmark::State& state) {
  const LatticePoint n = point(state);
  for (auto _ : state) benchmark::DoNotOptimize(latgreen::green_2d_endpoint(Complex(-0.5, 0.0), n));
}
BENCHMARK(BM_Endpoint2d)->Arg(0)->Arg(4)->Arg(8);

void BM_Recurrence2d(benchmark::State& state) {
  const LatticePoint n = point(state);
  for (auto _ : state) benchmark::DoNotOptimize(latgreen::green_2d_recurrence(Complex(-0.5, 0.0), n));
}
BENCHMARK(BM_Recurrence2d)->Arg(0)->Arg(4)->Arg(8);

void BM_Closed1d(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(latgreen::green_1d(Complex(-2.0, 0.5), state.range(0)));
}
BENCHMARK(BM_Closed1d)->Arg(0)->Arg(16);

void BM_QuadratureTorus(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(latgreen::quadrature_torus(2, Complex(-0.5, 0.0), {2, 1}, state.range(0)));
  }
}
BENCHMARK(BM_QuadratureTorus)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_LaplaceBessel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(latgreen::laplace_bessel(2, Complex(-1.0, 0.5), {2, 1}));
}
BENCHMARK(BM_LaplaceBessel)->Unit(benchmark::kMicrosecond);

void BM_FundSolExact(benchmark::State& state) {
  const LatticePoint n = point(state);
  for (auto _ : state) benchmark::DoNotOptimize(latgreen::fundsol_h0(n));
}
BENCHMARK(BM_FundSolExact)->Arg(2)->Arg(10)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
