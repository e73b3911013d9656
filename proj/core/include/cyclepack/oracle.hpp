#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cyclepack/graph.hpp"
#include "cyclepack/multigraph.hpp"

namespace cyclepack {

inline constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;

struct OracleOptions {
    int stop_at = 0;                  // > 0: return as soon as this many disjoint cycles found
    std::uint64_t node_budget = kDefaultOracleBudget;
    int seed_lower_bound = 0;         // known packing size; prunes as if already found
    std::optional<VertexSet> allowed; // restrict to an induced subgraph (default: all)
};

struct OracleResult {
    enum class Status {
        Exact,        // max_cycles is the maximum over the allowed set
        StopReached,  // found stop_at cycles and stopped; max may be larger
        BudgetExceeded,
    };
    Status status = Status::Exact;
    int max_cycles = 0;                     // best count found (>= seed when seeded)
    std::vector<std::vector<int>> witness;  // disjoint cycles achieving the count found
    std::uint64_t nodes = 0;
};

// Exact maximum number of vertex-disjoint cycles by branch and bound:
// branch on cycles through the lowest-index available vertex, enumerated
// shortest first, against the exclusion branch. With seed_lower_bound = s the
// search only proves/filters counts > s, so a caller holding s cycles can ask
// "is there an (s+1)-packing?" cheaply; witness stays empty if nothing beats s.
OracleResult oracle_max_packing(const Graph& g, const OracleOptions& opt = {});

// Multigraph variant: loops are 1-vertex cycles and a doubled edge is a
// 2-vertex cycle. Used to validate that reduction preserves packing size.
OracleResult oracle_max_packing(const Multigraph& m, const OracleOptions& opt = {});

}  // namespace cyclepack
