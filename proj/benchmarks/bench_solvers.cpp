#include <benchmark/benchmark.h>

#include "happy/io.hpp"
#include "happy/mhe.hpp"
#include "happy/mhv.hpp"

using namespace happy;

namespace {

Instance random_instance(Kind kind, int n, int ell, std::uint64_t seed) {
    return generate_random(kind, n, ell, 0.4, 0.5, seed);
}

void BM_mhe_brute_force(benchmark::State &state) {
    Instance inst = random_instance(Kind::MHE, static_cast<int>(state.range(0)), 3, 11);
    for (auto _ : state)
        benchmark::DoNotOptimize(mhe_brute_force(inst));
}

void BM_mhe_subset_dp(benchmark::State &state) {
    Instance inst = random_instance(Kind::MHE, static_cast<int>(state.range(0)), 3, 11);
    for (auto _ : state)
        benchmark::DoNotOptimize(mhe_subset_dp(inst));
}

// larger instances the exhaustive oracle cannot touch
void BM_mhe_subset_dp_wide(benchmark::State &state) {
    Instance inst = generate_random(Kind::MHE, static_cast<int>(state.range(0)), 4, 0.3,
                                    0.6, 13);
    for (auto _ : state)
        benchmark::DoNotOptimize(mhe_subset_dp(inst));
}

void BM_kernelize_mhe(benchmark::State &state) {
    Instance inst = generate_random(Kind::MHE, static_cast<int>(state.range(0)), 3, 0.05,
                                    0.1, 17);
    for (auto _ : state)
        benchmark::DoNotOptimize(kernelize_mhe(inst));
}

void BM_mhv_brute_force(benchmark::State &state) {
    Instance inst = random_instance(Kind::MHV, static_cast<int>(state.range(0)), 3, 19);
    for (auto _ : state)
        benchmark::DoNotOptimize(mhv_brute_force(inst));
}

void BM_guess_answer(benchmark::State &state) {
    Instance base = generate_random(Kind::MHV, static_cast<int>(state.range(0)), 3, 0.1,
                                    0.3, 23);
    Instance inst(base.kind, base.graph, base.precoloring, 3);
    std::uint64_t seed = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(guess_answer(inst, seed++));
}

void BM_compute_happy_sets(benchmark::State &state) {
    Instance inst = generate_random(Kind::MHV, static_cast<int>(state.range(0)), 3, 0.1,
                                    0.3, 29);
    for (auto _ : state)
        benchmark::DoNotOptimize(compute_happy_sets(inst.graph, inst.precoloring));
}

} // namespace

BENCHMARK(BM_mhe_brute_force)->DenseRange(6, 12, 2);
BENCHMARK(BM_mhe_subset_dp)->DenseRange(6, 12, 2);
BENCHMARK(BM_mhe_subset_dp_wide)->DenseRange(20, 40, 10);
BENCHMARK(BM_kernelize_mhe)->Range(64, 1024);
BENCHMARK(BM_mhv_brute_force)->DenseRange(6, 12, 2);
BENCHMARK(BM_guess_answer)->Range(64, 1024);
BENCHMARK(BM_compute_happy_sets)->Range(64, 1024);

BENCHMARK_MAIN();
