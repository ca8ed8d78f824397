#include <benchmark/benchmark.h>

#include "ramseyforge/bridges.hpp"
#include "ramseyforge/kset.hpp"
#include "ramseyforge/paths.hpp"
#include "ramseyforge/shift.hpp"
#include "ramseyforge/solver.hpp"

using namespace ramseyforge;

static void BM_Ksubsets16_8(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(ksubsets(16, 8));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(n_choose_k(16, 8)));
}
BENCHMARK(BM_Ksubsets16_8);

static void BM_RankRoundTrip(benchmark::State& state) {
    const auto all = ksubsets(14, 7);
    for (auto _ : state) {
        for (std::uint64_t r = 0; r < all.size(); ++r) {
            benchmark::DoNotOptimize(rank(all[r], 14));
        }
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(all.size()));
}
BENCHMARK(BM_RankRoundTrip);

static void BM_KeyColoringScan(benchmark::State& state) {
    const auto psi = chi_key_table();
    for (auto _ : state) {
        benchmark::DoNotOptimize(has_mono_bridge(psi, 4, 3));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * 1296);
}
BENCHMARK(BM_KeyColoringScan);

static void BM_EncodeBridge43(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(encode_bridge_cnf(4, 3));
    }
}
BENCHMARK(BM_EncodeBridge43);

static void BM_SolveBridge33(benchmark::State& state) {
    const Cnf cnf = encode_bridge_cnf(3, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve(cnf));
    }
}
BENCHMARK(BM_SolveBridge33);

static void BM_Decide2ColorableB43(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(bridge_2colorable(4, 3));
    }
}
BENCHMARK(BM_Decide2ColorableB43);

static void BM_ShiftColoring13_3(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_coloring_sat(13, 3, 3));
    }
}
BENCHMARK(BM_ShiftColoring13_3);

static void BM_VerifyP23(benchmark::State& state) {
    const ProperColoring phi = bit_color_pairs(8);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_p23(8, 6, phi));
    }
}
BENCHMARK(BM_VerifyP23);

BENCHMARK_MAIN();
