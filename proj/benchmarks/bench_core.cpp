#include <benchmark/benchmark.h>

#include <algorithm>
#include <map>

#include "spechtkl/cells.hpp"
#include "spechtkl/form.hpp"
#include "spechtkl/hecke.hpp"
#include "spechtkl/parabolic.hpp"
#include "spechtkl/partitions.hpp"
#include "spechtkl/specht.hpp"

namespace {

using namespace skl;

// Prebuilt inputs so each benchmark times only its own phase.
const KLTable& kl_for(int n) {
    static std::map<int, KLTable> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, KLTable::build(n)).first;
    return it->second;
}

const CellPartition& cells_for(int n) {
    static std::map<int, CellPartition> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, right_cells(kl_for(n))).first;
    return it->second;
}

Composition staircase(int n) {
    // the composition with the richest cell structure at small ranks
    Composition mu;
    for (int part = 2; n > 0; ++part) {
        int take = std::min(part, n);
        mu.insert(mu.begin(), take);
        n -= take;
    }
    return mu;
}

void BM_KLTableBuild(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(KLTable::build(n));
}

void BM_RightCells(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const KLTable& kl = kl_for(n);
    for (auto _ : state) benchmark::DoNotOptimize(right_cells(kl));
}

void BM_BarSelfDualityScan(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const KLTable& kl = kl_for(n);
    for (auto _ : state) {
        bool ok = true;
        for (int w = 0; w < kl.group().size(); ++w) {
            HeckeElt cw = kl.kl_element(w);
            ok = ok && bar_element(cw) == cw;
        }
        benchmark::DoNotOptimize(ok);
    }
}

void BM_ParabolicBuild(benchmark::State& state) {
    const Composition mu = staircase(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(ParabolicKLTable::build(mu));
}

void BM_SpechtAllCompositions(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const KLTable& kl = kl_for(n);
    const CellPartition& cp = cells_for(n);
    for (auto _ : state) {
        bool ok = true;
        for (const Composition& mu : compositions_of(n)) {
            SpechtModel m = build_specht_model(mu, kl, cp);
            ok = ok && verify_relations(m).ok;
        }
        benchmark::DoNotOptimize(ok);
    }
}

void BM_GramBuild(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Composition mu = staircase(n);
    const CellPartition& cp = cells_for(n);
    ParabolicKLTable pkl = ParabolicKLTable::build(mu);
    for (auto _ : state) benchmark::DoNotOptimize(gram(pkl, cp));
}

void BM_GramInverseSeries(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Composition mu = staircase(n);
    ParabolicKLTable pkl = ParabolicKLTable::build(mu);
    GramMatrix g = gram(pkl, cells_for(n));
    for (auto _ : state) benchmark::DoNotOptimize(simple_form(g, 20));
}

}  // namespace

BENCHMARK(BM_KLTableBuild)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RightCells)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BarSelfDualityScan)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ParabolicBuild)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SpechtAllCompositions)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GramBuild)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GramInverseSeries)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
