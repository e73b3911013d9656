#pragma once

#include <vector>

#include "cyclepack/graph.hpp"

namespace cyclepack {

// Undirected multigraph with loops. A loop contributes 2 to its vertex degree.
class Multigraph {
public:
    Multigraph() : n_(0) {}
    explicit Multigraph(int n) : n_(n), mult_(n, std::vector<int>(n, 0)), loops_(n, 0) {}
    static Multigraph from_simple(const Graph& g);

    int n() const { return n_; }
    int multiplicity(int u, int v) const { return mult_[u][v]; }
    int loops(int v) const { return loops_[v]; }
    void add_edge(int u, int v, int count = 1);
    void add_loop(int v, int count = 1) { loops_[v] += count; }
    int degree(int v) const;
    long long edge_count() const;  // parallel edges counted with multiplicity, plus loops

private:
    int n_;
    std::vector<std::vector<int>> mult_;
    std::vector<int> loops_;
};

struct ReductionOp {
    enum class Kind { DeleteBud, Suppress, SuppressToLoop };
    Kind kind;
    int v;           // removed vertex (original id)
    int x = -1;      // Suppress: new edge endpoint / SuppressToLoop: loop vertex
    int y = -1;      // Suppress: other endpoint
};

struct ReductionResult {
    Multigraph reduced;           // on compacted indices 0..kept.size()-1
    std::vector<int> kept;        // reduced index -> original vertex id
    std::vector<ReductionOp> trace;
};

// Repeatedly delete degree <= 1 vertices and suppress loop-free degree-2
// vertices (both edges to one neighbor -> loop there; two neighbors -> an
// added parallel edge), lowest index first, deletions before suppressions.
// Stops when no operation applies; an acyclic input reduces to the empty
// graph. Preserves the maximum number of vertex-disjoint cycles.
ReductionResult reduce_multigraph(const Multigraph& m);

inline ReductionResult reduce_multigraph(const Graph& g) {
    return reduce_multigraph(Multigraph::from_simple(g));
}

}  // namespace cyclepack
