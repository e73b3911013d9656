#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "cyclepack/vertex_set.hpp"

namespace cyclepack {

// Simple undirected graph on dense vertex indices 0..n-1.
// Immutable after construction; build via GraphBuilder or the edge-list ctor.
class Graph {
public:
    Graph() : n_(0), m_(0) {}
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    long long edge_count() const { return m_; }

    bool has_edge(int u, int v) const { return adj_[u].test(v); }
    int degree(int v) const { return deg_[v]; }
    const VertexSet& neighbors(int v) const { return adj_[v]; }

    std::vector<std::pair<int, int>> edges() const;

    // Adjacency bits of the upper triangle in column-major order
    // (0,1),(0,2),(1,2),(0,3),... as a '0'/'1' string; used for exact equality.
    std::string adjacency_bits() const;

private:
    int n_;
    long long m_;
    std::vector<VertexSet> adj_;
    std::vector<int> deg_;
};

class GraphBuilder {
public:
    explicit GraphBuilder(int n) : n_(n) {}
    GraphBuilder& add_edge(int u, int v) {
        edges_.emplace_back(u, v);
        return *this;
    }
    Graph build() const { return Graph(n_, edges_); }

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
};

struct DegreeStats {
    // Sentinel for sigma2 on graphs with no nonadjacent pair.
    static constexpr int sigma2_infinity = std::numeric_limits<int>::max();
    // Sentinel for theta on edgeless graphs.
    static constexpr int theta_undefined = std::numeric_limits<int>::min();

    int delta = 0;       // minimum degree
    int max_degree = 0;
    int sigma2 = sigma2_infinity;   // min d(x)+d(y) over nonadjacent pairs x != y
    int theta = theta_undefined;    // max d(x)+d(y) over edges xy
};

// Requires n >= 1.
DegreeStats degree_stats(const Graph& g);

// Number of edges with one end in a and the other in b; an edge inside
// the intersection counts twice (endpoint-pair convention, so
// edges_between(g, V, V) == 2 * edge_count).
long long edges_between(const Graph& g, const VertexSet& a, const VertexSet& b);

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);
// Every vertex of a adjacent to every vertex of b (a first in the numbering).
Graph join(const Graph& a, const Graph& b);
// Substitute a copy of h for every vertex of g: vertex (x,y) -> x*|h|+y,
// (x,y)~(x',y') iff xx' in E(g), or x==x' and yy' in E(h).
Graph blowup(const Graph& g, const Graph& h);
// Keep the vertices of s, renumbered in increasing order.
Graph induced_subgraph(const Graph& g, const VertexSet& s);
Graph relabel(const Graph& g, const std::vector<int>& perm);  // vertex v -> perm[v]

}  // namespace cyclepack
