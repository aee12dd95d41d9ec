#include <benchmark/benchmark.h>

#include "wmcs/bertrand.hpp"
#include "wmcs/gen.hpp"
#include "wmcs/instances.hpp"

using namespace wmcs;

static void BM_fixed_point_scan(benchmark::State& state) {
    Rng rng(11);
    Poset p = gen::random_poset(rng, static_cast<std::size_t>(state.range(0)));
    auto f = gen::random_correspondence(rng, p, gen::CorrShape::UpClosed);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fp::fixed_points(p, f));
    }
}
BENCHMARK(BM_fixed_point_scan)->Arg(8)->Arg(16)->Arg(32);

static void BM_sublattice_enumeration(benchmark::State& state) {
    Rng rng(12);
    Poset p = gen::random_lattice(rng, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(order::all_sublattices(p));
    }
}
BENCHMARK(BM_sublattice_enumeration)->Arg(6)->Arg(8)->Arg(10);

static void BM_dominance_scan(benchmark::State& state) {
    auto inst = instances::ridge_pair(state.range(0), Rational(1, 4), Rational(3, 4));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            choice::dominates(inst.grid, choice::DominanceKind::WeakInterval, inst.high,
                              inst.low));
    }
}
BENCHMARK(BM_dominance_scan)->Arg(2)->Arg(4)->Arg(6);

static void BM_nash_enumeration(benchmark::State& state) {
    std::vector<Rational> grid;
    for (long long k = 0; k <= state.range(0); ++k) grid.push_back(Rational(k));
    auto spec = games::pure_bertrand({grid, grid}, {Rational(2), Rational(2)});
    auto game = games::bertrand_build(spec);
    for (auto _ : state) {
        benchmark::DoNotOptimize(games::nash_set(game));
    }
}
BENCHMARK(BM_nash_enumeration)->Arg(5)->Arg(10)->Arg(20);

static void BM_stable_solve(benchmark::State& state) {
    Rng rng(13);
    auto e = gen::random_economy(rng, static_cast<std::size_t>(state.range(0)));
    bool ok = true;
    for (auto a : matching::all_agents(e)) {
        ok = ok && matching::axiom_check(e, a, matching::Axiom::SenAlpha).holds &&
             matching::weak_substitutable(e, a).holds;
    }
    if (!ok) {
        state.SkipWithError("sampled economy misses the solver hypotheses");
        return;
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(matching::stable_solve(e));
    }
}
BENCHMARK(BM_stable_solve)->Arg(5)->Arg(7);

BENCHMARK_MAIN();
