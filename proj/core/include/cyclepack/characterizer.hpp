#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclepack/families.hpp"
#include "cyclepack/graph.hpp"
#include "cyclepack/multigraph.hpp"
#include "cyclepack/packing.hpp"
#include "cyclepack/vertex_set.hpp"

namespace cyclepack {

// Numeric hypothesis data for (G, k) plus the derived flags used by the
// decision rules. alpha is computed by bounded search; alpha_exact is false
// when the budget ran out (flags depending on alpha are then unreliable and
// marked unknown via alpha_known).
struct HypothesisReport {
    int n = 0;
    int k = 0;
    int delta = 0;
    int sigma2 = 0;  // DegreeStats::sigma2_infinity when no nonadjacent pair
    int alpha = 0;
    bool alpha_known = true;

    bool h1 = false;        // n >= 3k + 1
    bool h2 = false;        // sigma2 >= 4k - 3
    bool h3 = false;        // alpha <= n - 2k (meaningful only if alpha_known)
    bool e2 = false;        // sigma2 >= 4k - 1
    bool ch_i = false;      // n >= 3k
    bool ch_ii = false;     // delta >= 2k
    bool dirac_ii = false;  // delta >= 2k - 1
    bool h4 = false;        // not one of the k-specific exceptional graphs
};

enum class Verdict { HasKCycles, NoKCycles, Unknown };

// A verdict plus the ordered list of rule evaluations that produced it.
struct Decision {
    Verdict verdict = Verdict::Unknown;
    std::vector<std::string> justification;
};

struct DecideOptions {
    int oracle_cap = 16;  // largest n the fallback exact search will attempt
    std::uint64_t oracle_nodes = 50'000'000;
    std::uint64_t independence_nodes = 10'000'000;
};

// The shapes a reduced multigraph without two disjoint cycles can take.
enum class ReducedType {
    K5,               // the complete graph on five vertices, simple
    WheelLike,        // hub joined to a simple rim cycle, spokes may repeat
    ThreeSet,         // a 3-set A, everything else independent and joined to A
    ForestPlusVertex  // one vertex carrying all loops, the rest a forest
};

// Classification witness: the reduced multigraph's shape, the family letter
// assigned by mapping the reduction trace back (0 when the input falls
// outside the lettered catalogue), and the data needed to re-validate.
struct LovaszFamily {
    ReducedType type;
    char letter = 0;  // 'a'..'e' or 0
    // Original-graph ids of the reduced multigraph's vertices.
    std::vector<int> core;
    // Type-specific witness: hub vertex (WheelLike), the 3-set (ThreeSet),
    // the loop vertex (ForestPlusVertex); empty for K5.
    std::vector<int> witness;
    ReductionResult reduction;
};

HypothesisReport check_hypotheses(const Graph& g, int k,
                                  std::uint64_t independence_budget = 10'000'000);

// Recognizes the parameter-specific sharpness graphs: Y1/Y2 at k = 3 (n = 10),
// wheels at k = 2, and the join of two complete k-graphs with k independent
// vertices at odd k with n = 3k.
std::optional<FamilyKind> is_exceptional(const Graph& g, int k);

// One vertex adjacent to all others whose removal leaves a single cycle.
bool is_wheel(const Graph& g);

// Full decision cascade: necessary conditions, then the degree/Ore-degree
// sufficient conditions, the k = 2 classification, and finally bounded exact
// search. Unknown only when every rule is inapplicable or out of budget.
Decision decide(const Graph& g, int k, const DecideOptions& opts = {});

// Decides whether a simple graph has two vertex-disjoint cycles by reducing
// it and matching the reduced multigraph against the known shapes. Returns a
// family exactly when no two disjoint cycles exist (guaranteed for inputs
// with n >= 6 and sigma2 >= 5; the matcher itself is exact for all inputs).
std::optional<LovaszFamily> classify_no_two_cycles(const Graph& g);

// Re-validates a classification witness against the input from scratch.
ValidationResult validate_family(const Graph& g, const LovaszFamily& fam);

}  // namespace cyclepack
