#include <benchmark/benchmark.h>

#include "tra/tra.hpp"

namespace {

const tra::EFieldSystem kField{1.0, 1.0, 1.5, 1};

void BM_GaussLaguerre(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tra::gauss_laguerre(order, 1.5));
}
BENCHMARK(BM_GaussLaguerre)->Arg(20)->Arg(80);

void BM_HamiltonianMatrix(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const double lambda = 0.7 * tra::lambda_star(kField);
  for (auto _ : state) benchmark::DoNotOptimize(tra::hamiltonian_matrix(kField, lambda, n));
}
BENCHMARK(BM_HamiltonianMatrix)->Arg(400);

void BM_Eigenvalues(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const tra::SymTridiagonal h = tra::hamiltonian_matrix(kField, 0.7 * tra::lambda_star(kField), n);
  for (auto _ : state) benchmark::DoNotOptimize(tra::eigenvalues(h, 5));
}
BENCHMARK(BM_Eigenvalues)->Arg(50)->Arg(400);

void BM_MatrixElementQuadrature(benchmark::State& state) {
  const double lambda = 0.7 * tra::lambda_star(kField);
  for (auto _ : state) benchmark::DoNotOptimize(tra::matrix_element_quadrature(kField, lambda, 20, 19));
}
BENCHMARK(BM_MatrixElementQuadrature);

void BM_FiniteDifferences(benchmark::State& state) {
  const tra::RadialPotential v = [](double r) { return 2.0 * r * r; };
  const tra::RadialGrid grid{tra::default_r_max(4.0, 1, 3), static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(tra::fd_spectrum(v, 1, grid, 3));
}
BENCHMARK(BM_FiniteDifferences)->Arg(4000)->Unit(benchmark::kMillisecond);

void BM_MinimalSolution(benchmark::State& state) {
  const double lambda = 0.7 * tra::lambda_star(kField);
  const tra::RecursionCoeffs c = tra::energy_coeffs(kField, lambda);
  const double e = tra::analytic_spectrum(kField, 0);
  for (auto _ : state) benchmark::DoNotOptimize(tra::minimal_solution(c, e, 40));
}
BENCHMARK(BM_MinimalSolution);

}  // namespace

BENCHMARK_MAIN();
