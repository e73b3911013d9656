#include "cyclepack/cycles.hpp"

#include <algorithm>

namespace cyclepack {

namespace {

// BFS from root inside allowed; the shortest cycle through root has length
// depth[x] + depth[q] + 1 for some scanned edge (x,q) closing two branches.
// Reconstruction trims the common prefix, which can only shorten the cycle.
std::optional<std::vector<int>> bfs_cycle(const Graph& g, const VertexSet& allowed, int root,
                                          int cap) {
    std::vector<int> depth(g.n(), -1), parent(g.n(), -1);
    std::vector<int> queue{root};
    depth[root] = 0;
    std::optional<std::vector<int>> best;
    int best_len = cap;

    auto path_to_root = [&](int v) {
        std::vector<int> p;
        for (int w = v; w >= 0; w = parent[w]) p.push_back(w);
        return p;  // v .. root
    };

    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int x = queue[qi];
        if (best_len > 0 && 2 * depth[x] + 1 > best_len) break;
        for (int q = g.neighbors(x).first(); q >= 0; q = g.neighbors(x).next(q)) {
            if (!allowed.test(q)) continue;
            if (depth[q] < 0) {
                depth[q] = depth[x] + 1;
                parent[q] = x;
                queue.push_back(q);
            } else if (q != parent[x] && x != parent[q]) {
                std::vector<int> a = path_to_root(x);   // x .. root
                std::vector<int> b = path_to_root(q);   // q .. root
                // Strip the shared tail (towards root), keeping the junction.
                while (a.size() >= 2 && b.size() >= 2 && a[a.size() - 2] == b[b.size() - 2]) {
                    a.pop_back();
                    b.pop_back();
                }
                if (a.back() != b.back()) continue;  // not in the same tree yet
                int len = int(a.size() + b.size()) - 1;
                if (len < 3) continue;
                if (best_len == 0 || len < best_len) {
                    // Cycle: junction .. x, then q .. (junction excluded).
                    std::vector<int> cyc(a.rbegin(), a.rend());
                    cyc.insert(cyc.end(), b.begin(), b.end() - 1);
                    best = std::move(cyc);
                    best_len = len;
                }
            }
        }
    }
    return best;
}

}  // namespace

std::optional<std::vector<int>> shortest_cycle(const Graph& g, const VertexSet& allowed,
                                               int max_len) {
    std::optional<std::vector<int>> best;
    // bfs_cycle records candidates of length strictly below cap (0 = no cap).
    int cap = max_len > 0 ? max_len + 1 : 0;
    for (int r = allowed.first(); r >= 0; r = allowed.next(r)) {
        auto c = bfs_cycle(g, allowed, r, cap);
        if (c && (!best || c->size() < best->size())) {
            best = c;
            cap = int(best->size());  // look only for strictly shorter ones
            if (best->size() == 3) break;
        }
    }
    return best;
}

void for_each_cycle(const Graph& g, const VertexSet& allowed, int len,
                    const std::function<bool(const std::vector<int>&)>& fn) {
    if (len < 3) return;
    std::vector<int> path;
    VertexSet on_path(g.n());
    bool stop = false;

    // Cycles anchored at v = minimum vertex; all other vertices exceed v.
    std::function<void(int, int)> extend = [&](int anchor, int last) {
        if (stop) return;
        if (int(path.size()) == len) {
            if (g.has_edge(last, anchor) && path[1] < path.back())
                if (!fn(path)) stop = true;
            return;
        }
        for (int q = g.neighbors(last).next(anchor); q >= 0; q = g.neighbors(last).next(q)) {
            if (!allowed.test(q) || on_path.test(q)) continue;
            path.push_back(q);
            on_path.set(q);
            extend(anchor, q);
            on_path.reset(q);
            path.pop_back();
            if (stop) return;
        }
    };

    for (int v = allowed.first(); v >= 0 && !stop; v = allowed.next(v)) {
        path = {v};
        on_path.clear();
        on_path.set(v);
        extend(v, v);
    }
}

LongestPathResult longest_path(const Graph& g, const VertexSet& allowed,
                               std::uint64_t node_budget) {
    LongestPathResult res;
    int total = allowed.count();
    if (total == 0) return res;
    res.vertices = 1;

    std::uint64_t nodes = 0;
    VertexSet on_path(g.n());

    std::function<void(int, int)> dfs = [&](int last, int size) {
        if (!res.exact) return;
        if (++nodes > node_budget) {
            res.exact = false;
            return;
        }
        if (size > res.vertices) res.vertices = size;
        if (res.vertices == total) return;
        // Bound: even taking every remaining allowed vertex cannot beat best.
        int remaining = total - size;
        if (size + remaining <= res.vertices) return;
        for (int q = g.neighbors(last).first(); q >= 0; q = g.neighbors(last).next(q)) {
            if (!allowed.test(q) || on_path.test(q)) continue;
            on_path.set(q);
            dfs(q, size + 1);
            on_path.reset(q);
            if (!res.exact || res.vertices == total) return;
        }
    };

    for (int s = allowed.first(); s >= 0; s = allowed.next(s)) {
        on_path.clear();
        on_path.set(s);
        dfs(s, 1);
        if (!res.exact || res.vertices == total) break;
    }
    return res;
}

}  // namespace cyclepack
