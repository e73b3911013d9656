#include "cyclepack/graph.hpp"

#include <stdexcept>

namespace cyclepack {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n), m_(0) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    adj_.assign(n, VertexSet(n));
    deg_.assign(n, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("graph: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("graph: loop not allowed in simple graph");
        if (adj_[u].test(v)) continue;
        adj_[u].set(v);
        adj_[v].set(u);
        ++deg_[u];
        ++deg_[v];
        ++m_;
    }
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(std::size_t(m_));
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v))
            out.emplace_back(u, v);
    return out;
}

std::string Graph::adjacency_bits() const {
    std::string s;
    s.reserve(std::size_t(n_) * (n_ - 1) / 2);
    for (int v = 1; v < n_; ++v)
        for (int u = 0; u < v; ++u)
            s.push_back(has_edge(u, v) ? '1' : '0');
    return s;
}

DegreeStats degree_stats(const Graph& g) {
    if (g.n() < 1) throw std::invalid_argument("degree_stats: empty graph");
    DegreeStats st;
    st.delta = std::numeric_limits<int>::max();
    st.max_degree = 0;
    for (int v = 0; v < g.n(); ++v) {
        st.delta = std::min(st.delta, g.degree(v));
        st.max_degree = std::max(st.max_degree, g.degree(v));
    }
    for (int u = 0; u < g.n(); ++u) {
        for (int v = u + 1; v < g.n(); ++v) {
            int s = g.degree(u) + g.degree(v);
            if (g.has_edge(u, v)) {
                if (st.theta == DegreeStats::theta_undefined || s > st.theta) st.theta = s;
            } else {
                if (st.sigma2 == DegreeStats::sigma2_infinity || s < st.sigma2) st.sigma2 = s;
            }
        }
    }
    return st;
}

long long edges_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
    long long total = 0;
    for (int u = a.first(); u >= 0; u = a.next(u))
        total += g.neighbors(u).intersection_count(b);
    return total;
}

Graph complement(const Graph& g) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v)) es.emplace_back(u, v);
    return Graph(g.n(), es);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> es = a.edges();
    for (auto [u, v] : b.edges()) es.emplace_back(u + a.n(), v + a.n());
    return Graph(a.n() + b.n(), es);
}

Graph join(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> es = a.edges();
    for (auto [u, v] : b.edges()) es.emplace_back(u + a.n(), v + a.n());
    for (int u = 0; u < a.n(); ++u)
        for (int v = 0; v < b.n(); ++v)
            es.emplace_back(u, a.n() + v);
    return Graph(a.n() + b.n(), es);
}

Graph blowup(const Graph& g, const Graph& h) {
    int k = h.n();
    std::vector<std::pair<int, int>> es;
    for (auto [x, xp] : g.edges())
        for (int y = 0; y < k; ++y)
            for (int yp = 0; yp < k; ++yp)
                es.emplace_back(x * k + y, xp * k + yp);
    for (int x = 0; x < g.n(); ++x)
        for (auto [y, yp] : h.edges())
            es.emplace_back(x * k + y, x * k + yp);
    return Graph(g.n() * k, es);
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    std::vector<int> verts = s.to_vector();
    std::vector<int> index(g.n(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = int(i);
    std::vector<std::pair<int, int>> es;
    for (int u : verts)
        for (int v = g.neighbors(u).next(u); v >= 0; v = g.neighbors(u).next(v))
            if (index[v] >= 0) es.emplace_back(index[u], index[v]);
    return Graph(int(verts.size()), es);
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    if (int(perm.size()) != g.n()) throw std::invalid_argument("relabel: bad permutation size");
    std::vector<std::pair<int, int>> es;
    es.reserve(std::size_t(g.edge_count()));
    for (auto [u, v] : g.edges()) es.emplace_back(perm[u], perm[v]);
    return Graph(g.n(), es);
}

}  // namespace cyclepack
