#include <benchmark/benchmark.h>

#include "orbhf/catalog.hpp"
#include "orbhf/homology.hpp"
#include "orbhf/orbifold.hpp"

using namespace orbhf;

static void BM_BoxAD(benchmark::State& state) {
    auto a = orb_extend(random_type_a(3, {8, 16}), 3);
    auto d = d_n(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(box_a_d(a, d));
}
BENCHMARK(BM_BoxAD)->Arg(2)->Arg(8)->Arg(32);

static void BM_CheckTypeA(benchmark::State& state) {
    auto a = orb_extend(random_type_a(5, {8, 16}), static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(check_type_a(a));
}
BENCHMARK(BM_CheckTypeA)->Arg(1)->Arg(4)->Arg(16);

static void BM_HfoPipeline(benchmark::State& state) {
    auto a = random_type_a(11, {6, 12});
    OrbifoldOrders orders({2, 3, 4, static_cast<int>(state.range(0))});
    for (auto _ : state) benchmark::DoNotOptimize(hfo(a, orders));
}
BENCHMARK(BM_HfoPipeline)->Arg(2)->Arg(5);

static void BM_RankGf2(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Gf2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.toggle(i, i);
        m.toggle(i, (i * 7 + 3) % n);
        m.toggle((i * 13 + 1) % n, i);
    }
    for (auto _ : state) benchmark::DoNotOptimize(rank_gf2(m));
}
BENCHMARK(BM_RankGf2)->Arg(256)->Arg(1024);
BENCHMARK_MAIN();
