#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "phtk/phtk.hpp"

using namespace phtk;

namespace {

PointCloud noisy_circle(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> noise(0.0, 0.05);
    std::vector<double> coords;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(n);
        coords.insert(coords.end(), {std::cos(t) + noise(rng), std::sin(t) + noise(rng), noise(rng)});
    }
    return PointCloud(3, std::move(coords));
}

PersistenceDiagram random_diagram(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 10.0);
    std::vector<PersistencePair> pairs;
    for (std::size_t i = 0; i < n; ++i) {
        double b = u(rng), d = u(rng);
        if (d < b) std::swap(b, d);
        pairs.push_back({1, b, d});
    }
    return PersistenceDiagram(std::move(pairs));
}

}  // namespace

static void BM_PairwiseDistances(benchmark::State& state) {
    const auto cloud = noisy_circle(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(pairwise_distances(cloud));
}
BENCHMARK(BM_PairwiseDistances)->Arg(111)->Arg(500);

static void BM_BuildRips(benchmark::State& state) {
    const auto d = pairwise_distances(noisy_circle(static_cast<std::size_t>(state.range(0)), 2));
    for (auto _ : state) {
        auto f = build_rips(d, {2, 0.8});
        state.counters["simplices"] = static_cast<double>(f.size());
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(BM_BuildRips)->Arg(60)->Arg(111)->Unit(benchmark::kMillisecond);

static void BM_Reduce(benchmark::State& state) {
    const auto d = pairwise_distances(noisy_circle(static_cast<std::size_t>(state.range(0)), 3));
    const auto f = build_rips(d, {1, d.max_distance()});
    const auto m = FiltrationBoundaryMatrix::from_filtration(f);
    const ReduceOptions options{state.range(1) != 0};
    for (auto _ : state) benchmark::DoNotOptimize(reduce(m, options));
    state.counters["columns"] = static_cast<double>(m.size());
}
BENCHMARK(BM_Reduce)->Args({60, 1})->Args({60, 0})->Args({111, 1})->Unit(benchmark::kMillisecond);

static void BM_RankZ2(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(4);
    std::bernoulli_distribution bit(0.05);
    std::vector<std::vector<BoundaryMatrixZ2::Index>> cols(n);
    for (auto& c : cols) {
        for (std::size_t r = 0; r < n; ++r) {
            if (bit(rng)) c.push_back(static_cast<BoundaryMatrixZ2::Index>(r));
        }
    }
    const BoundaryMatrixZ2 m(n, std::move(cols));
    for (auto _ : state) benchmark::DoNotOptimize(rank_z2(m));
}
BENCHMARK(BM_RankZ2)->Arg(256)->Arg(1024);

static void BM_Bottleneck(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = random_diagram(n, 5), b = random_diagram(n, 6);
    for (auto _ : state) benchmark::DoNotOptimize(bottleneck_distance(a, b, 1));
}
BENCHMARK(BM_Bottleneck)->Arg(50)->Arg(200);

static void BM_Wasserstein(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = random_diagram(n, 7), b = random_diagram(n, 8);
    for (auto _ : state) benchmark::DoNotOptimize(wasserstein_distance(a, b, 1));
}
BENCHMARK(BM_Wasserstein)->Arg(50)->Arg(200);

BENCHMARK_MAIN();
