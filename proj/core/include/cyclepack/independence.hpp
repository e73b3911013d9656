#pragma once

#include <cstdint>
#include <optional>

#include "cyclepack/graph.hpp"

namespace cyclepack {

inline constexpr std::uint64_t kDefaultIndependenceBudget = 10'000'000;

struct IndependenceResult {
    enum class Status {
        Exact,             // alpha is the independence number
        ThresholdReached,  // a set larger than the threshold was found; search stopped
        BudgetExceeded,    // node budget hit; alpha is only a lower bound
    };
    Status status = Status::Exact;
    int alpha = 0;         // best independent set size found
    VertexSet witness;     // an independent set of that size
    std::uint64_t nodes = 0;
};

// Exact independence number by branch and bound (branch on a maximum-degree
// vertex of the candidate subgraph; greedy clique cover upper bound).
IndependenceResult independence_number(const Graph& g,
                                       std::uint64_t node_budget = kDefaultIndependenceBudget);

// Early-exit query "is alpha(g) > t?": stops as soon as a set of size t+1 is
// found. Yes carries a witness of size t+1; No is exact (search completed);
// nullopt = budget exceeded, undetermined.
struct ThresholdAnswer {
    bool exceeds;
    VertexSet witness;  // size t+1 when exceeds
    std::uint64_t nodes = 0;
};
std::optional<ThresholdAnswer> independence_exceeds(
    const Graph& g, int t, std::uint64_t node_budget = kDefaultIndependenceBudget);

}  // namespace cyclepack
