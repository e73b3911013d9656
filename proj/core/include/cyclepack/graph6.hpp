#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "cyclepack/graph.hpp"

namespace cyclepack {

struct Graph6Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// graph6 codec. Header byte n+63 for n <= 62, '~' + 3 six-bit bytes for
// 63 <= n < 2^18. Payload: upper-triangle bits in column-major order
// (0,1),(0,2),(1,2),(0,3),..., packed big-endian six per byte, zero padded.
Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);

// Edge list: one "u v" pair per line, 0-indexed; blank lines and lines
// starting with '#' are ignored; n = max endpoint + 1.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

}  // namespace cyclepack
