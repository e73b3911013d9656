#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclepack/cycles.hpp"
#include "cyclepack/graph.hpp"
#include "cyclepack/vertex_set.hpp"

namespace cyclepack {

// A family of vertex-disjoint cycles plus the remainder set R = V minus the
// cycle vertices. Each cycle is a vertex sequence; consecutive entries and the
// wrap-around pair must be edges of the host graph.
struct CyclePacking {
    std::vector<std::vector<int>> cycles;
    VertexSet remainder;

    CyclePacking() : remainder(0) {}
    explicit CyclePacking(int n) : remainder(VertexSet::full(n)) {}

    int total_cycle_length() const {
        int total = 0;
        for (const auto& c : cycles) total += int(c.size());
        return total;
    }
    // Recomputes remainder from the cycles (universe size n).
    void rebuild_remainder(int n);
};

// Reason codes accompany every false verdict from the validators.
struct ValidationResult {
    bool ok = true;
    std::string reason;
    explicit operator bool() const { return ok; }
};

// Structural check: cycles have length >= 3, use distinct in-range vertices,
// traverse edges of g (including wrap-around), are pairwise disjoint, and the
// remainder is exactly the complement of the cycle vertices.
ValidationResult validate_packing(const Graph& g, const CyclePacking& p);

// Lexicographic quality of a packing: more cycles, then fewer cycle vertices,
// then a longer path in the remainder, then more remainder edges.
struct OptimalityKey {
    int o1 = 0;        // number of cycles (maximize)
    int o2 = 0;        // total cycle length (minimize)
    int o3 = 0;        // vertices on a longest path of G[R] (maximize)
    long long o4 = 0;  // edge count of G[R] (maximize)
    bool o3_exact = true;

    friend bool operator==(const OptimalityKey& a, const OptimalityKey& b) {
        return a.o1 == b.o1 && a.o2 == b.o2 && a.o3 == b.o3 && a.o4 == b.o4;
    }
};

// True when `cand` strictly beats `base` in the order (o1 up, o2 down, o3 up,
// o4 up).
bool key_improves(const OptimalityKey& base, const OptimalityKey& cand);

// Computes the key; o3 uses a bounded longest-path search and clears o3_exact
// when the budget ran out (o3 is then the best length found).
OptimalityKey optimality_key(const Graph& g, const CyclePacking& p,
                             std::uint64_t longest_path_budget = kDefaultLongestPathBudget);

}  // namespace cyclepack
