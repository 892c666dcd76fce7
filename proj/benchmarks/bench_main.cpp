#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include <utfw/certificate.hpp>
#include <utfw/critical_charge.hpp>
#include <utfw/energy_terms.hpp>
#include <utfw/model_params.hpp>
#include <utfw/molecule.hpp>
#include <utfw/radial_grid.hpp>
#include <utfw/uncertainty.hpp>

namespace {

using namespace utfw;

RadialDensity exp_density(std::size_t n) {
  const auto grid = RadialGrid::log_spaced(n, 50.0, 1e-6);
  return RadialDensity::from_function(
      grid, [](double r) { return 2.0 * std::exp(-r / 1.5); });
}

void BM_hartree(benchmark::State& state) {
  const auto rho = exp_density(static_cast<std::size_t>(state.range(0)));
  const auto p = params_from_lambda(0.2);
  for (auto _ : state)
    benchmark::DoNotOptimize(hartree_radial(rho, p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_hartree)->Range(1 << 10, 1 << 17)->Complexity(benchmark::oN);

void BM_atomic_energy(benchmark::State& state) {
  const auto rho = exp_density(static_cast<std::size_t>(state.range(0)));
  const auto p = params_from_lambda(0.2);
  for (auto _ : state)
    benchmark::DoNotOptimize(atomic_energy(rho, 60.0, p));
}
BENCHMARK(BM_atomic_energy)->Range(1 << 10, 1 << 17);

void BM_certify_pair(benchmark::State& state) {
  const auto p = params_from_lambda(0.2);
  const MoleculeConfig cfg{
      {{50.0, {0.0, 0.0, 0.0}}, {50.0, {1.0, 0.0, 0.0}}}};
  for (auto _ : state)
    benchmark::DoNotOptimize(certify(cfg, p));
}
BENCHMARK(BM_certify_pair);

void BM_molecular_x_root(benchmark::State& state) {
  const auto p = params_from_lambda(0.2);
  for (auto _ : state)
    benchmark::DoNotOptimize(molecular_x_root(p));
}
BENCHMARK(BM_molecular_x_root);

void BM_mup_gap(benchmark::State& state) {
  const auto p = params_from_lambda(0.2);
  const auto grid =
      RadialGrid::log_spaced(static_cast<std::size_t>(state.range(0)), 1.0,
                             1e-8);
  std::mt19937_64 rng(1);
  const auto probe = random_spline_probe(grid, rng);
  for (auto _ : state)
    benchmark::DoNotOptimize(mup_gap(probe, p.a, p.b));
}
BENCHMARK(BM_mup_gap)->Range(1 << 10, 1 << 15);

}  // namespace

BENCHMARK_MAIN();
