#include <benchmark/benchmark.h>

#include <memory>

#include <q1d/basis.hpp>
#include <q1d/config_space.hpp>
#include <q1d/correlation.hpp>
#include <q1d/eigensolver.hpp>
#include <q1d/grid_solver.hpp>
#include <q1d/hamiltonian.hpp>
#include <q1d/limits.hpp>
#include <q1d/special.hpp>

using namespace q1d;

static void BM_erfcx(benchmark::State& state) {
  double t = 0.0;
  for (auto _ : state) {
    t += 1e-3;
    benchmark::DoNotOptimize(erfcx(t));
  }
}
BENCHMARK(BM_erfcx);

static void BM_effective_interaction(benchmark::State& state) {
  double x = 0.0;
  for (auto _ : state) {
    x += 1e-3;
    benchmark::DoNotOptimize(effective_interaction(x, 30.0));
  }
}
BENCHMARK(BM_effective_interaction);

static void BM_gauss_hermite_total(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gauss_hermite_total(order));
}
BENCHMARK(BM_gauss_hermite_total)->Arg(32)->Arg(64)->Arg(96);

static void BM_smooth_tensor(benchmark::State& state) {
  const OrbitalBasis basis(static_cast<int>(state.range(0)));
  const EffectivePotential u(30.0);
  for (auto _ : state) benchmark::DoNotOptimize(smooth_tensor(basis, u));
}
BENCHMARK(BM_smooth_tensor)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_coulomb_tensor(benchmark::State& state) {
  const OrbitalBasis basis(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(antisymmetrized_coulomb_tensor(basis));
}
BENCHMARK(BM_coulomb_tensor)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_bosonic_ground_state(benchmark::State& state) {
  const int n_max = static_cast<int>(state.range(0));
  const TrapParams params(3, 2.0, Anisotropy::finite(30.0));
  const OrbitalBasis basis(n_max);
  const TwoBodyTensor v = smooth_tensor(basis, EffectivePotential(30.0));
  const auto space = ConfigurationSpace::symmetric(n_max, 3);
  const auto h = build_bosonic_hamiltonian(params, basis, v, space);
  for (auto _ : state) benchmark::DoNotOptimize(ground_state(h));
}
BENCHMARK(BM_bosonic_ground_state)
    ->Arg(10)
    ->Arg(14)
    ->Unit(benchmark::kMillisecond);

static void BM_grid_ground_state(benchmark::State& state) {
  const TrapParams params(2, 2.0, Anisotropy::finite(30.0));
  GridAxes axes = default_grid_axes(params);
  axes.points = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(imaginary_time_ground_state(params, axes));
}
BENCHMARK(BM_grid_ground_state)
    ->Arg(128)
    ->Arg(256)
    ->Unit(benchmark::kMillisecond);

static void BM_fermionized_rdm_n2(benchmark::State& state) {
  const OrbitalBasis basis(6);
  const CIState tg = tg_state(2, basis);
  const FermionizedQuadrature quad = FermionizedQuadrature::defaults(2, 0.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(rdm_from_fermionized(tg, quad));
}
BENCHMARK(BM_fermionized_rdm_n2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
