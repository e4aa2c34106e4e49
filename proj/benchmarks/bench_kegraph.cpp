#include <benchmark/benchmark.h>

#include "kegraph/classify.hpp"
#include "kegraph/critical.hpp"
#include "kegraph/generators.hpp"
#include "kegraph/independence.hpp"
#include "kegraph/matching.hpp"
#include "kegraph/report.hpp"
#include "kegraph/theorems.hpp"

namespace {

void BM_alpha_random12(benchmark::State& state) {
    const keg::Graph g = keg::erdos_renyi(12, 0.3, 42);
    for (auto _ : state) benchmark::DoNotOptimize(keg::alpha(g));
}
BENCHMARK(BM_alpha_random12);

void BM_matching_random12(benchmark::State& state) {
    const keg::Graph g = keg::erdos_renyi(12, 0.3, 42);
    for (auto _ : state) benchmark::DoNotOptimize(keg::matching_number(g));
}
BENCHMARK(BM_matching_random12);

void BM_critical_difference_random12(benchmark::State& state) {
    const keg::Graph g = keg::erdos_renyi(12, 0.3, 42);
    for (auto _ : state) benchmark::DoNotOptimize(keg::critical_difference(g));
}
BENCHMARK(BM_critical_difference_random12);

void BM_classify_cycle19(benchmark::State& state) {
    const keg::Graph g = keg::family("cycle", {19});
    for (auto _ : state) benchmark::DoNotOptimize(keg::classify(g));
}
BENCHMARK(BM_classify_cycle19);

void BM_critical_profile_windmill5(benchmark::State& state) {
    const keg::Graph g = keg::family("friendship", {5});
    for (auto _ : state) benchmark::DoNotOptimize(keg::critical_profile(g));
}
BENCHMARK(BM_critical_profile_windmill5);

void BM_analyze_fixture(benchmark::State& state) {
    const keg::Graph g = keg::fixture("fig5-G1");
    for (auto _ : state) benchmark::DoNotOptimize(keg::analyze(g));
}
BENCHMARK(BM_analyze_fixture);

void BM_check_all_fixture(benchmark::State& state) {
    const keg::Graph g = keg::fixture("fig5-G1");
    for (auto _ : state) benchmark::DoNotOptimize(keg::check_all(g));
}
BENCHMARK(BM_check_all_fixture);

}  // namespace

BENCHMARK_MAIN();
