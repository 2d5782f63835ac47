#include "pcade/heco.hpp"
#include "pcade/linalg.hpp"
#include "pcade/pca.hpp"
#include "pcade/registry.hpp"
#include "pcade/rng.hpp"

#include <benchmark/benchmark.h>

using namespace pcade;

namespace {

Matrix random_symmetric(std::size_t n, Rng& rng) {
    Matrix a(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = r; c < n; ++c) {
            a(r, c) = a(c, r) = rng.uniform(-1.0, 1.0);
        }
    }
    return a;
}

std::vector<Vector> random_cloud(std::size_t k, std::size_t n, Rng& rng) {
    std::vector<Vector> points(k, Vector(n));
    for (auto& p : points) {
        for (auto& x : p) {
            x = rng.uniform(-100.0, 100.0);
        }
    }
    return points;
}

void BM_SymEigen(benchmark::State& state) {
    Rng rng(1);
    const auto a = random_symmetric(static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sym_eigen(a));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SymEigen)->RangeMultiplier(2)->Range(2, 128)->Complexity(benchmark::oNCubed);

// k = 12 matches the HECO subpopulation.
void BM_PcaProjection(benchmark::State& state) {
    Rng rng(2);
    const auto points = random_cloud(12, static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pca_projection(points, 5));
    }
}
BENCHMARK(BM_PcaProjection)->Arg(10)->Arg(30)->Arg(50)->Arg(100);

void BM_Evaluate(benchmark::State& state) {
    const auto problem = make_problem("eq-line", static_cast<std::size_t>(state.range(0)));
    Rng rng(3);
    const auto x = random_point(problem, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(problem.evaluate(x));
    }
}
BENCHMARK(BM_Evaluate)->Arg(10)->Arg(100);

// Whole short runs; time per generation is reported as a rate.
void BM_HecoGenerations(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const auto problem = make_problem("sphere-linear", n);
    HecoConfig config;
    config.pca_probability = state.range(1) / 100.0;
    config.max_evaluations = config.mu0(n) + 200 * config.subproblems;
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_heco(problem, config, ++seed));
    }
    state.counters["generations"] = benchmark::Counter(200.0, benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_HecoGenerations)->Args({10, 0})->Args({10, 10})->Args({30, 10})->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
