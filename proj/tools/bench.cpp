#include <benchmark/benchmark.h>

#include "sonf/coset_geometry.hpp"
#include "sonf/random_params.hpp"
#include "sonf/so_jacquet.hpp"

namespace {

void coset_sweep(benchmark::State& state, bool parallel) {
  int n = static_cast<int>(state.range(0));
  long long p = 3;
  auto reps = sonf::enumerate_coset_reps(n, 2, p);
  for (auto _ : state) {
    auto report = sonf::verify_coset_distinctness(reps, n, 2, p, parallel);
    benchmark::DoNotOptimize(report.pairs_checked);
    if (!report.ok()) state.SkipWithError("collision");
  }
  state.counters["pairs"] = static_cast<double>(reps.size() * (reps.size() - 1) / 2);
}

void bm_coset_serial(benchmark::State& state) { coset_sweep(state, false); }
void bm_coset_parallel(benchmark::State& state) { coset_sweep(state, true); }

void hecke_sweep(benchmark::State& state, bool parallel) {
  int r = static_cast<int>(state.range(0));
  long long p = 3;
  auto reps = sonf::enumerate_hecke_reps(r, r / 2, p);
  for (auto _ : state) {
    auto report = sonf::verify_hecke_distinctness(reps, r, r / 2, p, parallel);
    benchmark::DoNotOptimize(report.pairs_checked);
    if (!report.ok()) state.SkipWithError("collision");
  }
}

void bm_hecke_serial(benchmark::State& state) { hecke_sweep(state, false); }
void bm_hecke_parallel(benchmark::State& state) { hecke_sweep(state, true); }

void bm_count_ur(benchmark::State& state) {
  std::mt19937_64 rng(7);
  sonf::ParamGenOptions opts;
  opts.max_per_unramified_line = static_cast<int>(state.range(0));
  std::vector<sonf::DiscreteLParameter> params;
  for (int i = 0; i < 32; ++i) params.push_back(sonf::random_parameter(rng, opts));
  for (auto _ : state) {
    long long total = 0;
    for (auto& phi : params) total += sonf::count_mu_ur(phi);
    benchmark::DoNotOptimize(total);
  }
}

}  // namespace

BENCHMARK(bm_coset_serial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_coset_parallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_hecke_serial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_hecke_parallel)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_count_ur)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
