#pragma once

#include <string>

#include "cyclepack/graph.hpp"

namespace cyclepack {

enum class FamilyKind {
    Y1,                  // K8 with one edge wz replaced by the path w-x-y-z
    Y2,                  // K1 joined to K44 with one vertex split into an edge
    Gk,                  // complement(K_{2k-2}) joined to (complement(K_{2k-3}) + K3)
    GkExtended,          // Gk(r) joined to K_{2t}, valid when r >= t+3
    C5BlowupK3bar,       // C5 with every vertex blown up into 3 independent vertices
    C5BlowupExtended,    // C5 blowup joined to 2k-8 independent vertices, 4 <= k <= 6
    Hsharp,              // complement(K_{k+1}) joined to K_{2k-1}
    TwoKkJoinKkBar,      // (K_k + K_k) joined to complement(K_k)
    Wheel,               // hub adjacent to an (n-1)-cycle, n >= 4
    CompleteK,
    CompleteBipartite,
    Cycle,
    KkkPlusKk,           // K_{k,k} + K_k (complement of TwoKkJoinKkBar)
};

struct FamilySpec {
    FamilyKind kind;
    // Interpretation depends on kind: k for the k-parameterized families,
    // n for Wheel/CompleteK/Cycle, (a,b) = (r,t) for GkExtended and
    // (s,t) for CompleteBipartite.
    int a = 0;
    int b = 0;
};

// Deterministic construction; throws std::invalid_argument on out-of-range
// parameters (see validity notes per kind in named_family's implementation).
Graph named_family(const FamilySpec& spec);

std::string family_name(FamilyKind kind);

}  // namespace cyclepack
