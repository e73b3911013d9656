#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cyclepack/characterizer.hpp"
#include "cyclepack/graph.hpp"
#include "cyclepack/packing.hpp"
#include "cyclepack/vertex_set.hpp"

namespace cyclepack {

// A proper vertex coloring whose class sizes differ by at most one.
struct EquitableColoring {
    std::vector<VertexSet> classes;
    int r = 0;
};

// Checks all three invariants: classes partition V, each class is independent,
// and any two class sizes differ by at most one.
ValidationResult validate_coloring(const Graph& g, const EquitableColoring& c);

struct ColoringSearch {
    enum class Status {
        Found,         // `coloring` holds a valid equitable r-coloring
        None,          // exhaustive search proved no equitable r-coloring exists
        Undetermined,  // search gave up without a proof either way
    };
    Status status = Status::Undetermined;
    std::optional<EquitableColoring> coloring;
};

// Best-effort equitable r-coloring: greedy assignment over several
// deterministic vertex orders, balance repair along class-move chains, then
// exact backtracking for n <= 15 under `node_budget`, and seeded restarts for
// larger graphs. Succeeds whenever max degree + 1 <= r; reports None only when
// the exact search ran to completion.
ColoringSearch equitable_coloring(const Graph& g, int r,
                                  std::uint64_t node_budget = 2'000'000);

// Maximum Ore-degree max over edges xy of d(x)+d(y);
// DegreeStats::theta_undefined for edgeless graphs.
int theta(const Graph& g);

// Does G (with |G| = 3k) partition into k vertex-disjoint triangles?
// Equivalent to the complement having an equitable k-coloring; each complement
// color class is a triangle of G. `triangles`, when non-null, receives the
// validated partition on a positive answer (when one was constructed).
Decision has_k_triangle_partition(const Graph& g, int k,
                                  CyclePacking* triangles = nullptr);

}  // namespace cyclepack
