#include <benchmark/benchmark.h>

#include <cstdint>

#include "tci/normal.hpp"
#include "tci/reinsurance.hpp"
#include "tci/ruin_mc.hpp"

namespace {

const tci::ReinsuranceModel kModel{2.0, 0.22, 0.05, 0.25, 0.35, 1.0};
const tci::TargetDist kTarget{0.05, 0.2, 1.0};
const tci::ReinsuranceModel kTripleModel{1.0, 0.15, 0.06, 0.2, 0.35, 1.0};
const tci::TargetDist kTripleTarget{0.02, 0.2, 1.0};

void BM_StdNormalCdf(benchmark::State& state) {
    double z = -4.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(tci::std_normal_cdf(z));
        z = z < 4.0 ? z + 1e-3 : -4.0;
    }
}
BENCHMARK(BM_StdNormalCdf);

void BM_SolvePair(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(tci::solve_pair(kModel, kTarget));
    }
}
BENCHMARK(BM_SolvePair);

void BM_SurvivalDirect(benchmark::State& state) {
    const tci::ReinsurancePair pair = tci::solve_pair(kModel, kTarget);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            tci::survival_prob(kModel, kTarget, pair.b1, pair.b0, tci::SurvivalAlgo::direct));
    }
}
BENCHMARK(BM_SurvivalDirect);

void BM_SurvivalDecomposition(benchmark::State& state) {
    const tci::ReinsurancePair pair = tci::solve_pair(kModel, kTarget);
    for (auto _ : state) {
        benchmark::DoNotOptimize(tci::survival_prob(kModel, kTarget, pair.b1, pair.b0,
                                                    tci::SurvivalAlgo::decomposition));
    }
}
BENCHMARK(BM_SurvivalDecomposition);

void BM_ThreePeriodQuadrature(benchmark::State& state) {
    const tci::ReinsuranceTriple triple =
        tci::three_period_circle(kTripleModel, kTripleTarget, 12).front();
    for (auto _ : state) {
        benchmark::DoNotOptimize(tci::three_period_survival(kTripleModel, kTripleTarget, triple));
    }
}
BENCHMARK(BM_ThreePeriodQuadrature);

void BM_SegmentSurvival(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(tci::segment_survival(0.5, 0.1, 0.3, 1.0));
    }
}
BENCHMARK(BM_SegmentSurvival);

void BM_PathInfimum(benchmark::State& state) {
    const tci::PiecewiseBM process{0.5, {{0.5, 0.1, 0.3}, {0.5, -0.2, 0.3}}, 1};
    std::uint64_t path = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(tci::path_infimum(process, path++));
    }
}
BENCHMARK(BM_PathInfimum);

void BM_RuinMcContinuous(benchmark::State& state) {
    const tci::PiecewiseBM process{0.5, {{0.5, 0.1, 0.3}, {0.5, -0.2, 0.3}}, 1};
    const long paths = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(tci::ruin_prob_continuous(process, paths));
    }
    state.SetItemsProcessed(state.iterations() * paths);
}
BENCHMARK(BM_RuinMcContinuous)->Arg(1024)->Arg(16384);

void BM_CurveFit(benchmark::State& state) {
    const tci::ReinsuranceModel model{1.0, 0.05, 0.05, 0.3, 0.5, 2.5};
    const auto [g1, g2] = tci::curve_targets(model, 0.06, 0.15);
    for (auto _ : state) {
        benchmark::DoNotOptimize(tci::solve_strategy_curve(g1, g2, model.T));
    }
}
BENCHMARK(BM_CurveFit);

} // namespace

BENCHMARK_MAIN();
