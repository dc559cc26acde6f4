#include <benchmark/benchmark.h>

#include <vector>

#include "hetpanel/bootstrap.hpp"
#include "hetpanel/ecdf.hpp"
#include "hetpanel/jackknife.hpp"
#include "hetpanel/kstest.hpp"
#include "hetpanel/montecarlo.hpp"
#include "hetpanel/rng.hpp"
#include "hetpanel/unit_stats.hpp"

using namespace hetpanel;

namespace {

Panel bench_panel(std::size_t n, std::size_t t) {
  DgpConfig config;
  const auto params = sample_unit_params(config, n, rng::derive_key(99, {1}));
  return simulate_panel(params, t, rng::derive_key(99, {2}));
}

void bm_compute_unit_stats(benchmark::State& state) {
  const Panel panel = bench_panel(static_cast<std::size_t>(state.range(0)), 48);
  for (auto _ : state) {
    auto stats = compute_unit_stats(panel, 1);
    benchmark::DoNotOptimize(stats);
  }
}
BENCHMARK(bm_compute_unit_stats)->Arg(250)->Arg(1000);

void bm_simulate_panel(benchmark::State& state) {
  DgpConfig config;
  const auto params =
      sample_unit_params(config, static_cast<std::size_t>(state.range(0)), rng::derive_key(99, {1}));
  for (auto _ : state) {
    Panel panel = simulate_panel(params, 48, rng::derive_key(99, {3}));
    benchmark::DoNotOptimize(panel);
  }
}
BENCHMARK(bm_simulate_panel)->Arg(1000);

void bm_bootstrap_mean(benchmark::State& state) {
  const Panel panel = bench_panel(1000, 12);
  const auto bundle = build_bundle(panel, 1, JackknifeOrder::thirds_and_half);
  BootstrapConfig config;
  config.draws = static_cast<std::size_t>(state.range(0));
  config.seed = 5;
  const StatisticSpec spec = StatisticSpec::parse("mean:rho1");
  for (auto _ : state) {
    auto r = bootstrap_statistic(bundle, spec, config);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(bm_bootstrap_mean)->Arg(200)->Arg(1000);

void bm_kolmogorov_cdf(benchmark::State& state) {
  double a = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kolmogorov_cdf(a));
    a = a > 3.0 ? 0.3 : a + 1e-4;
  }
}
BENCHMARK(bm_kolmogorov_cdf);

void bm_ks_two_sample(benchmark::State& state) {
  rng::Stream stream(rng::derive_key(8, {1}));
  std::vector<double> a(1500), b(1000);
  for (auto& v : a) v = stream.next_gaussian();
  for (auto& v : b) v = stream.next_gaussian() + 0.1;
  for (auto _ : state) {
    auto r = ks_two_sample(a, b);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(bm_ks_two_sample);

}  // namespace

BENCHMARK_MAIN();
