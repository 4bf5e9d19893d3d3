#include <benchmark/benchmark.h>

#include "mrsk/generators.hpp"
#include "mrsk/lpp.hpp"
#include "mrsk/rng.hpp"

using namespace mrsk;

namespace {

PathEnv bench_env(int n, int horizon) {
  Rng rng(1234, 99);
  EnvGenOptions opt;
  opt.n = n;
  opt.horizon = horizon;
  opt.max_events_per_line = horizon;
  return random_env(rng, opt);
}

void BM_LppSingle(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  PathEnv env = bench_env(n, 8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        lpp(env, GridPoint{Rational(0), n}, GridPoint{env.horizon(), 1}));
  }
}
BENCHMARK(BM_LppSingle)->Arg(2)->Arg(4)->Arg(6);

void BM_LppMulti(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  int k = n / 2;
  PathEnv env = bench_env(n, 8);
  EndpointSpec spec;
  for (int i = 0; i < k; ++i) {
    spec.starts.push_back(GridPoint{Rational(0), n});
    spec.ends.push_back(GridPoint{env.horizon(), 1});
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(lpp_multi(env, spec));
  }
}
BENCHMARK(BM_LppMulti)->Arg(2)->Arg(4)->Arg(6);

void BM_Profile(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  PathEnv env = bench_env(n, 8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lpp_profile(env, 1, 1));
  }
}
BENCHMARK(BM_Profile)->Arg(2)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
