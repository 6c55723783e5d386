#include <benchmark/benchmark.h>

#include <random>

#include "gsic/gsic.hpp"

using namespace gsic;

namespace {

ComplexMatrix random_matrix(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  ComplexMatrix m(n, n);
  for (auto& z : m.entries()) z = {g(rng), g(rng)};
  return m;
}

DensityMatrix random_state(std::size_t d, unsigned seed) {
  const ComplexMatrix g = random_matrix(d * d, seed);
  ComplexMatrix m = g * adjoint(g);
  m *= Complex(1.0 / trace(m).real());
  return DensityMatrix((m + adjoint(m)) * Complex(0.5), Split{d, d});
}

void BM_TraceNorm(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(trace_norm(m));
}
BENCHMARK(BM_TraceNorm)->Arg(9)->Arg(16)->Arg(81);

void BM_HermitianEig(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = random_matrix(n, 2);
  const auto h = (g + adjoint(g)) * Complex(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eig(h));
}
BENCHMARK(BM_HermitianEig)->Arg(3)->Arg(9)->Arg(81);

void BM_CorrelationMatrix(benchmark::State& state) {
  const auto p = GeneralSicPovm::construct(3, 0.01);
  const auto q = conjugate_povm(p);
  const auto rho = random_state(3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(correlation_matrix(p, q, rho));
}
BENCHMARK(BM_CorrelationMatrix);

void BM_DetectTheorem1(benchmark::State& state) {
  const auto p = GeneralSicPovm::construct(3, 0.01);
  const auto rho = mix_white_noise(horodecki_3x3(0.45), 0.995);
  for (auto _ : state) benchmark::DoNotOptimize(detect_theorem1(rho, p));
}
BENCHMARK(BM_DetectTheorem1);

void BM_Construct(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(GeneralSicPovm::construct(d, 0.001));
}
BENCHMARK(BM_Construct)->Arg(2)->Arg(3)->Arg(5);

void BM_FeasibleRange(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(feasible_t_range(d));
}
BENCHMARK(BM_FeasibleRange)->Arg(2)->Arg(3);

void BM_RealignmentPpt(benchmark::State& state) {
  const auto rho = horodecki_3x3(0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(detect_realignment(rho));
    benchmark::DoNotOptimize(detect_ppt(rho));
  }
}
BENCHMARK(BM_RealignmentPpt);

}  // namespace
BENCHMARK_MAIN();
