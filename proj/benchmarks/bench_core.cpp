#include <benchmark/benchmark.h>

#include <cmath>

#include "bjorling/bjorling.hpp"

using namespace bjorling;

namespace {

void BM_ExprEvalD2(benchmark::State& state) {
  const ParamMap p{{"A", 1.0}, {"B", 0.5}};
  const Expr e = parse("A*(t^3/6+B*t^2/2+B^2*t/2)*cosh(t)/sqrt(2+t^2)", p).bind(p);
  double t = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_d2(e, t));
    t = t < 1.0 ? t + 1e-3 : 0.1;
  }
}
BENCHMARK(BM_ExprEvalD2);

void BM_CumulativeIntegral(benchmark::State& state) {
  QuadratureOptions q;
  q.nodes = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    const Antiderivative H = cumulative_integral(
        [](double t) { return LVec3{0.0, std::sinh(t), 1.0}; }, 0.0, {-2, 2}, 1e-10, q);
    benchmark::DoNotOptimize(H(1.234));
  }
}
BENCHMARK(BM_CumulativeIntegral)->Arg(256)->Arg(2048)->Unit(benchmark::kMillisecond);

void BM_SolveHelicoid(benchmark::State& state) {
  const Fixture f = named_surface("helicoid3");
  for (auto _ : state) benchmark::DoNotOptimize(solve(f.data)(0.5, 0.3));
}
BENCHMARK(BM_SolveHelicoid)->Unit(benchmark::kMillisecond);

void BM_SampleGrid(benchmark::State& state) {
  const Fixture f = named_surface("helicoid3");
  const Surface S = solve(f.data);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const Mesh m = sample_grid(S.as_function(), S.domain(), n, n, static_cast<unsigned>(state.range(1)));
    benchmark::DoNotOptimize(m.points.data());
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_SampleGrid)->Args({201, 1})->Args({201, 0})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
