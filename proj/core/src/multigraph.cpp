#include "cyclepack/multigraph.hpp"

#include <stdexcept>

namespace cyclepack {

Multigraph Multigraph::from_simple(const Graph& g) {
    Multigraph m(g.n());
    for (auto [u, v] : g.edges()) m.add_edge(u, v);
    return m;
}

void Multigraph::add_edge(int u, int v, int count) {
    if (u == v) throw std::invalid_argument("multigraph: use add_loop for loops");
    mult_[u][v] += count;
    mult_[v][u] += count;
}

int Multigraph::degree(int v) const {
    int d = 2 * loops_[v];
    for (int u = 0; u < n_; ++u) d += mult_[v][u];
    return d;
}

long long Multigraph::edge_count() const {
    long long total = 0;
    for (int u = 0; u < n_; ++u) {
        total += loops_[u];
        for (int v = u + 1; v < n_; ++v) total += mult_[u][v];
    }
    return total;
}

ReductionResult reduce_multigraph(const Multigraph& m) {
    int n = m.n();
    std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
    std::vector<int> loops(n, 0), deg(n, 0);
    std::vector<bool> alive(n, true);
    for (int u = 0; u < n; ++u) {
        loops[u] = m.loops(u);
        for (int v = 0; v < n; ++v) mult[u][v] = m.multiplicity(u, v);
        deg[u] = m.degree(u);
    }
    int alive_count = n;
    std::vector<ReductionOp> trace;

    auto remove_vertex = [&](int v) {
        alive[v] = false;
        --alive_count;
        for (int u = 0; u < n; ++u) {
            if (mult[v][u]) {
                deg[u] -= mult[v][u];
                mult[u][v] = mult[v][u] = 0;
            }
        }
        deg[v] = 0;
        loops[v] = 0;
    };

    while (alive_count > 0) {
        int bud = -1, two = -1;
        for (int v = 0; v < n && bud < 0; ++v) {
            if (!alive[v]) continue;
            if (deg[v] <= 1) bud = v;
            else if (deg[v] == 2 && loops[v] == 0 && two < 0) two = v;
        }
        if (bud >= 0) {
            trace.push_back({ReductionOp::Kind::DeleteBud, bud});
            remove_vertex(bud);
            continue;
        }
        if (two < 0) break;
        int x = -1, y = -1;
        for (int u = 0; u < n; ++u) {
            if (mult[two][u]) {
                if (x < 0) x = u;
                else y = u;
            }
        }
        if (y < 0) {
            // Both edge ends at the same neighbor: parallel pair becomes a loop.
            trace.push_back({ReductionOp::Kind::SuppressToLoop, two, x, x});
            remove_vertex(two);
            ++loops[x];
            deg[x] += 2;
        } else {
            trace.push_back({ReductionOp::Kind::Suppress, two, x, y});
            remove_vertex(two);
            ++mult[x][y];
            ++mult[y][x];
            ++deg[x];
            ++deg[y];
        }
    }

    ReductionResult out;
    for (int v = 0; v < n; ++v)
        if (alive[v]) out.kept.push_back(v);
    out.reduced = Multigraph(int(out.kept.size()));
    for (std::size_t i = 0; i < out.kept.size(); ++i) {
        out.reduced.add_loop(int(i), loops[out.kept[i]]);
        for (std::size_t j = i + 1; j < out.kept.size(); ++j) {
            int c = mult[out.kept[i]][out.kept[j]];
            if (c) out.reduced.add_edge(int(i), int(j), c);
        }
    }
    out.trace = std::move(trace);
    return out;
}

}  // namespace cyclepack
