#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cyclepack/families.hpp"
#include "cyclepack/graph.hpp"
#include "cyclepack/independence.hpp"
#include "cyclepack/oracle.hpp"
#include "cyclepack/packing.hpp"

namespace cyclepack {

// Search budgets for the constructive packer. All defaults are sized for
// graphs of a few dozen vertices; every budget miss is surfaced, never
// silently converted into a verdict.
struct PackerBudgets {
    // Node cap for each bounded exhaustive multi-cycle exchange (and for the
    // final whole-graph stall proof).
    std::uint64_t exchange_nodes = 1'000'000;
    // Node cap for longest-path evaluation inside optimality keys.
    std::uint64_t longest_path_nodes = kDefaultLongestPathBudget;
    // Node cap for the independent-set threshold query.
    std::uint64_t independence_nodes = kDefaultIndependenceBudget;
    // Improvement-loop iteration cap is improvement_constant * n^4.
    int improvement_constant = 8;
    // Extra length cap for replacement-cycle searches; 0 keeps the default
    // (the current cycle's length bounds the search already).
    int cycle_length_cap = 0;
};

// Success: k vertex-disjoint cycles.
struct Packing {
    CyclePacking packing;
};

// An independent set of size >= n - 2k + 1; its existence rules out k
// disjoint cycles because each cycle carries at least two vertices outside
// any independent set.
struct IndependentSetCertificate {
    VertexSet set;
};

// The input is one of the known sharpness graphs for its parameters.
struct ExceptionalGraph {
    FamilyKind kind;  // Y1, Y2, Wheel, or TwoKkJoinKkBar
};

// A hypothesis inequality fails, and the search proved no k cycles exist.
struct HypothesisViolation {
    std::string hypothesis;  // human-readable inequality, e.g. "n >= 3k"
    long long observed = 0;
    long long bound = 0;
};

// The improvement search stalled below k cycles with no certificate found.
// Under the theorem's hypotheses this signals an implementation gap or a
// genuine counterexample; diagnostics allow independent re-examination.
struct CandidateCounterexample {
    CyclePacking packing;
    bool exhaustive = false;  // true when the stall was proved maximal
    std::uint64_t iterations = 0;
    std::string note;
};

using PackerResult = std::variant<Packing, IndependentSetCertificate, ExceptionalGraph,
                                  HypothesisViolation, CandidateCounterexample>;

// Diagnostics for a single improvement step.
struct ImproveDiagnostics {
    bool exchange_budget_hit = false;  // some bounded exchange search was cut short
    char move = 0;                     // '1'..'4' for the accepted move, 0 if none
};

// One first-improvement step over the move catalog, in order:
//   move 1: add the shortest cycle of G[R];
//   move 2: replace a cycle by a strictly shorter one inside that cycle plus R;
//   move 3: replace s cycles (s <= 3) by s+1 disjoint ones found inside those
//           cycles plus R, by bounded exhaustive search;
//   move 4: replace a cycle by an equal-length one improving the remainder's
//           longest path, then its edge count.
// Returns the improved packing, or nothing at a local optimum. Deterministic:
// all candidate orders are by vertex/cycle index.
std::optional<CyclePacking> improve_step(const Graph& g, const CyclePacking& p,
                                         const PackerBudgets& budgets = {},
                                         ImproveDiagnostics* diag = nullptr);

// Constructs k disjoint cycles or a certificate. Bootstrap adds at most 3k
// helper edges forming k triangles on the 3k highest-degree vertices, then
// removes them one at a time, re-optimizing in between; certificates are
// extracted from the final stalled packing on the true graph.
// k = 0 returns an empty Packing; k < 0 throws std::invalid_argument.
PackerResult find_disjoint_cycles(const Graph& g, int k, const PackerBudgets& budgets = {});

// Re-validates a result against g and k from scratch (cycle structure,
// certificate inequalities, isomorphism for exceptional kinds).
ValidationResult validate_result(const Graph& g, int k, const PackerResult& r);

}  // namespace cyclepack
