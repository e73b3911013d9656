// Microbenchmarks for the hot paths: cycle search, the exact packing oracle,
// the constructive packer, canonical forms, and class enumeration.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "cyclepack/characterizer.hpp"
#include "cyclepack/cycles.hpp"
#include "cyclepack/families.hpp"
#include "cyclepack/graph.hpp"
#include "cyclepack/independence.hpp"
#include "cyclepack/isomorphism.hpp"
#include "cyclepack/oracle.hpp"
#include "cyclepack/packer.hpp"
#include "cyclepack/verifier.hpp"

using namespace cyclepack;

namespace {

Graph random_graph(int n, int per1024, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (int(rng() & 1023) < per1024) edges.emplace_back(u, v);
    return Graph(n, edges);
}

void BM_ShortestCycle(benchmark::State& state) {
    Graph g = random_graph(int(state.range(0)), 300, 17);
    VertexSet all = VertexSet::full(g.n());
    for (auto _ : state) {
        auto c = shortest_cycle(g, all, g.n());
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_ShortestCycle)->Arg(16)->Arg(32)->Arg(64);

void BM_OracleExact(benchmark::State& state) {
    Graph g = random_graph(int(state.range(0)), 450, 23);
    for (auto _ : state) {
        OracleResult r = oracle_max_packing(g);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_OracleExact)->Arg(10)->Arg(12)->Arg(14);

void BM_PackerDense(benchmark::State& state) {
    int n = int(state.range(0));
    Graph g = random_graph(n, 700, 31);
    int k = n / 3;
    for (auto _ : state) {
        PackerResult r = find_disjoint_cycles(g, k);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_PackerDense)->Arg(12)->Arg(18)->Arg(24)->Arg(30);

void BM_CanonicalKey(benchmark::State& state) {
    Graph g = random_graph(int(state.range(0)), 512, 41);
    for (auto _ : state) {
        std::uint64_t key = canonical_key(g);
        benchmark::DoNotOptimize(key);
    }
}
BENCHMARK(BM_CanonicalKey)->Arg(8)->Arg(10)->Arg(11);

void BM_CanonicalString(benchmark::State& state) {
    Graph g = random_graph(int(state.range(0)), 512, 43);
    for (auto _ : state) {
        std::string s = canonical_string(g);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_CanonicalString)->Arg(8)->Arg(16)->Arg(24);

void BM_Independence(benchmark::State& state) {
    Graph g = random_graph(int(state.range(0)), 400, 47);
    for (auto _ : state) {
        IndependenceResult r = independence_number(g);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_Independence)->Arg(16)->Arg(24)->Arg(32);

void BM_EnumerateClasses(benchmark::State& state) {
    int n = int(state.range(0));
    for (auto _ : state) {
        auto v = enumerate_graphs(n, {});
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_EnumerateClasses)->Arg(6)->Arg(7);

void BM_DecideSharp(benchmark::State& state) {
    Graph g = named_family({FamilyKind::Y1});
    for (auto _ : state) {
        Decision d = decide(g, 3);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_DecideSharp);

}  // namespace

BENCHMARK_MAIN();
