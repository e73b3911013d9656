#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "cyclepack/graph.hpp"

namespace cyclepack {

// Shortest cycle inside g[allowed], length at most max_len (0 = no cap).
// Deterministic: BFS from each allowed root in ascending order, first
// strictly shorter candidate wins. Returns the cycle as a vertex sequence.
std::optional<std::vector<int>> shortest_cycle(const Graph& g, const VertexSet& allowed,
                                               int max_len = 0);

// Enumerate all simple cycles of exactly len vertices inside g[allowed], each
// once, in deterministic order (anchored at their minimum vertex, second
// vertex smaller than last). fn returns false to stop early.
void for_each_cycle(const Graph& g, const VertexSet& allowed, int len,
                    const std::function<bool(const std::vector<int>&)>& fn);

struct LongestPathResult {
    int vertices = 0;   // vertex count of the best path found (0 on empty set)
    bool exact = true;  // false when the node budget cut the search
};

inline constexpr std::uint64_t kDefaultLongestPathBudget = 1'000'000;

LongestPathResult longest_path(const Graph& g, const VertexSet& allowed,
                               std::uint64_t node_budget = kDefaultLongestPathBudget);

}  // namespace cyclepack
