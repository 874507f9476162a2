#include <benchmark/benchmark.h>

#include <random>

#include "nlperim/energy.hpp"
#include "nlperim/kernel.hpp"
#include "nlperim/parallel.hpp"
#include "nlperim/plateau.hpp"

using namespace nlperim;

namespace {

const QuadratureConfig kQuad{};

void BM_ComputeConstants(benchmark::State& state) {
  const auto k = make_exponential(1.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compute_constants(k, kQuad));
}
BENCHMARK(BM_ComputeConstants)->Arg(2)->Arg(3);

void BM_BuildWeights(benchmark::State& state) {
  const auto k = make_exponential(1.0, 2, 2.0);
  const GridSpec g = grid_covering(2, 1.0 / state.range(0), {-0.5, -0.5, 0}, {0.5, 0.5, 0});
  for (auto _ : state) benchmark::DoNotOptimize(build_weights(k, g, kQuad));
}
BENCHMARK(BM_BuildWeights)->Arg(64)->Arg(128);

void BM_PerimeterEnergy(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto k = make_exponential(1.0, 2, 0.5);
  const GridSpec g =
      grid_with_collar(2, 1.0 / n, {-0.5, -0.5, 0}, {0.5, 0.5, 0}, k.truncation_radius);
  const CellSet omega = make_shape(ShapeSpec::box({-0.5, -0.5, 0}, {0.5, 0.5, 0}), g);
  const DomainMask dom = make_domain_mask(omega, k.truncation_radius);
  const PairWeightTable w = build_weights(k, g, kQuad);
  const CellSet ball = make_shape(ShapeSpec::ball({0, 0, 0}, 0.3), g);
  for (auto _ : state) benchmark::DoNotOptimize(nonlocal_perimeter(ball, dom, w));
}
BENCHMARK(BM_PerimeterEnergy)->Arg(64)->Arg(128);

void BM_FlatnessSolve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto k = make_exponential(1.0, 2, 0.5);
  const GridSpec g =
      grid_with_collar(2, 1.0 / n, {-0.5, -0.5, 0}, {0.5, 0.5, 0}, k.truncation_radius);
  const CellSet omega = make_shape(ShapeSpec::box({-0.5, -0.5, 0}, {0.5, 0.5, 0}), g);
  const CellSet trace = make_shape(ShapeSpec::halfspace(1, 0.0), g);
  const PairWeightTable w = build_weights(k, g, kQuad);
  for (auto _ : state) {
    DomainMask dom = make_domain_mask(omega, k.truncation_radius);
    PlateauProblem p = make_plateau_problem(std::move(dom), trace, w);
    benchmark::DoNotOptimize(solve_exact(p));
  }
}
BENCHMARK(BM_FlatnessSolve)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_PairwiseSum(benchmark::State& state) {
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::vector<double> values(state.range(0));
  for (auto& v : values) v = uni(rng);
  for (auto _ : state) benchmark::DoNotOptimize(pairwise_sum(values));
}
BENCHMARK(BM_PairwiseSum)->Arg(1 << 16)->Arg(1 << 20);

}  // namespace

BENCHMARK_MAIN();
