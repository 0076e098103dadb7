// Serial reference vs OpenMP kernels on lattice-wide scans.

#include "gwlp/aberration.hpp"
#include "gwlp/count_algebra.hpp"
#include "gwlp/kernels.hpp"

#include <benchmark/benchmark.h>
#include <random>

namespace {

gwlp::Fraction random_fraction(std::vector<int> levels, int runs, unsigned seed) {
    gwlp::DesignSpec design(std::move(levels));
    std::mt19937 rng(seed);
    std::vector<gwlp::Point> points;
    for (int r = 0; r < runs; ++r) {
        std::vector<int> coords;
        for (int s : design.levels()) coords.push_back(std::uniform_int_distribution<int>(0, s - 1)(rng));
        points.emplace_back(std::move(coords));
    }
    return gwlp::Fraction(design, points);
}

gwlp::Execution exec_of(const benchmark::State& state) {
    return state.range(0) == 0 ? gwlp::Execution::serial : gwlp::Execution::parallel;
}

void BM_LevelCountTable_3pow8(benchmark::State& state) {
    const auto f = random_fraction({3, 3, 3, 3, 3, 3, 3, 3}, 81, 1);
    for (auto _ : state) benchmark::DoNotOptimize(gwlp::level_count_table(f, exec_of(state)));
}
BENCHMARK(BM_LevelCountTable_3pow8)->Arg(0)->Arg(1)->ArgNames({"parallel"});

void BM_LevelCountTable_Mixed(benchmark::State& state) {
    const auto f = random_fraction({2, 3, 4, 6, 2, 3, 4}, 96, 2);
    for (auto _ : state) benchmark::DoNotOptimize(gwlp::level_count_table(f, exec_of(state)));
}
BENCHMARK(BM_LevelCountTable_Mixed)->Arg(0)->Arg(1)->ArgNames({"parallel"});

void BM_GwlpMean_2pow12(benchmark::State& state) {
    const auto f = random_fraction(std::vector<int>(12, 2), 64, 3);
    for (auto _ : state) benchmark::DoNotOptimize(gwlp::gwlp_mean(f, exec_of(state)));
}
BENCHMARK(BM_GwlpMean_2pow12)->Arg(0)->Arg(1)->ArgNames({"parallel"});

void BM_ResidualTable_3pow4(benchmark::State& state) {
    const auto f = random_fraction({3, 3, 3, 3}, 27, 4);
    const auto family = gwlp::family_from_fraction(f);
    for (auto _ : state) benchmark::DoNotOptimize(gwlp::residual_table(family, exec_of(state)));
}
BENCHMARK(BM_ResidualTable_3pow4)->Arg(0)->Arg(1)->ArgNames({"parallel"});

void BM_Enumerate_3pow3(benchmark::State& state) {
    const gwlp::DesignSpec design({3, 3, 3});
    const auto fixed = gwlp::strength_family(design, 9, 2);
    const std::vector<gwlp::Exponent> free{gwlp::Exponent({1, 1, 1}), gwlp::Exponent({1, 1, 2})};
    for (auto _ : state)
        benchmark::DoNotOptimize(gwlp::enumerate_admissible(fixed, free, {10'000'000, exec_of(state)}));
}
BENCHMARK(BM_Enumerate_3pow3)->Arg(0)->Arg(1)->ArgNames({"parallel"})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
