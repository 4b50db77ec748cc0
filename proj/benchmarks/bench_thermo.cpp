#include "ozthermo/msa.hpp"
#include "ozthermo/oz_numeric.hpp"
#include "ozthermo/py_mixture.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

namespace {

oz::Mixture electrolyte(std::size_t species, double alpha_sq) {
  std::vector<oz::Species> sp;
  for (std::size_t i = 0; i < species; ++i) {
    const int z = i % 2 == 0 ? 1 : -1;
    sp.push_back({0.8 + 0.3 * static_cast<double>(i), 0.01, z});
  }
  if (species % 2 == 1) sp.back().valence = 0;
  return oz::make_mixture(sp, alpha_sq);
}

void BM_SolveGamma(benchmark::State &state) {
  const auto m = electrolyte(static_cast<std::size_t>(state.range(0)), 50.0);
  for (auto _ : state) benchmark::DoNotOptimize(oz::solve_gamma(m).gamma);
}
BENCHMARK(BM_SolveGamma)->Arg(2)->Arg(4)->Arg(8);

void BM_HelmholtzCharging(benchmark::State &state) {
  const auto m = electrolyte(4, 50.0);
  for (auto _ : state) benchmark::DoNotOptimize(oz::helmholtz_charging(m));
}
BENCHMARK(BM_HelmholtzCharging);

void BM_MixtureThermo(benchmark::State &state) {
  std::vector<oz::Species> sp;
  for (int i = 0; i < state.range(0); ++i) sp.push_back({1.0 + 0.1 * i, 0.05, 0});
  const auto m = oz::make_mixture(sp);
  for (auto _ : state) benchmark::DoNotOptimize(oz::mixture_thermo(m).z_bmcsl);
}
BENCHMARK(BM_MixtureThermo)->Arg(2)->Arg(8)->Arg(32);

void BM_SineTransform(benchmark::State &state) {
  const oz::RadialGrid grid(static_cast<std::size_t>(state.range(0)), 0.01);
  const oz::SineTransform dst(grid);
  std::vector<double> f(grid.size()), out(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) f[j] = std::exp(-grid.r(j));
  for (auto _ : state) {
    dst.forward(f, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SineTransform)->Arg(1024)->Arg(4096)->Arg(16384);

void BM_SolvePyNumeric(benchmark::State &state) {
  const double eta = static_cast<double>(state.range(0)) / 10.0;
  for (auto _ : state) {
    const auto t = oz::solve_py_numeric(eta, 1.0, oz::default_grid(1.0));
    benchmark::DoNotOptimize(t.c_hat_zero);
    state.counters["iterations"] = static_cast<double>(t.iterations);
  }
}
BENCHMARK(BM_SolvePyNumeric)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
