#pragma once

#include <cstdint>
#include <string>

#include "cyclepack/graph.hpp"

namespace cyclepack {

// Canonical form: iterative degree refinement to a stable ordered partition,
// then backtracking over individualizations of the first non-singleton cell
// (one representative per twin class), keeping the lexicographically smallest
// relabeled adjacency bit string. Equal strings iff isomorphic.
// Returned string is n + ':' + upper-triangle bits of the canonical labeling.
std::string canonical_string(const Graph& g);

// graph6 line of the canonically relabeled graph.
std::string canonical_graph6(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

// Fast canonical form for n <= 11: the upper-triangle adjacency bits
// (column-major, first bit most significant) of a canonical relabeling packed
// into 64 bits. For graphs of equal order, equal keys iff isomorphic. The
// labeling is chosen independently of canonical_string, so only class
// equality -- not the bit pattern -- matches between the two forms.
// Built for bulk dedup during enumeration: no heap allocation per call.
// Throws std::invalid_argument for n > 11.
std::uint64_t canonical_key(const Graph& g);

// Raw-mask variant for enumeration hot loops: adj[v] is the neighbor bitmask
// of vertex v (bit u set iff uv is an edge). Same key as the Graph overload.
std::uint64_t canonical_key(const std::uint16_t* adj, int n);

}  // namespace cyclepack
