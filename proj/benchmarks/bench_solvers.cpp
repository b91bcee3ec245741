#include <benchmark/benchmark.h>

#include "acd/fast_control.hpp"
#include "acd/game.hpp"
#include "acd/infinite_horizon.hpp"
#include "acd/verify.hpp"

using namespace acd;

static void BM_Integrate(benchmark::State& state) {
  const ModelParams p = verify::single_player_reference();
  const FeedbackPolicy pol = optimal_policy(p).policy;
  const double step = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(integrate(pol, std::nullopt, p, 0.3, 50.0, step));
}
BENCHMARK(BM_Integrate)->Arg(100)->Arg(1000);

static void BM_DiscountedCost(benchmark::State& state) {
  const ModelParams p = verify::single_player_reference();
  const FeedbackPolicy pol = optimal_policy(p).policy;
  for (auto _ : state) benchmark::DoNotOptimize(discounted_cost(pol, std::nullopt, p, 0.3, Player::defender));
}
BENCHMARK(BM_DiscountedCost);

static void BM_Roots(benchmark::State& state) {
  const ModelParams p = verify::single_player_reference();
  for (auto _ : state) benchmark::DoNotOptimize(roots_F_B(p));
}
BENCHMARK(BM_Roots);

static void BM_BruteForce(benchmark::State& state) {
  const ModelParams p = verify::single_player_reference();
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_best_policy(p, 0.3));
}
BENCHMARK(BM_BruteForce)->Unit(benchmark::kMillisecond);

static void BM_FastOracle(benchmark::State& state) {
  FastProblem pr;
  pr.params.alpha_R = 0.25;
  pr.params.lambda = 4.0;
  pr.shape = CostShape::quadratic;
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_constant_minimizer(pr));
}
BENCHMARK(BM_FastOracle);

static void BM_Nash(benchmark::State& state) {
  const ModelParams p = verify::game_reference();
  for (auto _ : state) {
    const NashProfile np = nash_profile(p, 0.18);
    benchmark::DoNotOptimize(discounted_costs(np.defender_policy, np.attacker_policy, p, 0.18));
  }
}
BENCHMARK(BM_Nash);

BENCHMARK_MAIN();
