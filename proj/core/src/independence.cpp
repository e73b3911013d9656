#include "cyclepack/independence.hpp"

namespace cyclepack {

namespace {

struct Searcher {
    const Graph& g;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;
    int best = -1;
    VertexSet best_set;
    // Stop as soon as best reaches this value (threshold+1 queries); -1 = never.
    int stop_at = -1;

    explicit Searcher(const Graph& g_, std::uint64_t budget_)
        : g(g_), budget(budget_), best_set(g_.n()) {}

    // Upper bound on the independence number of g[cand] via a greedy clique
    // cover: alpha cannot exceed the number of cliques in any cover.
    int clique_cover_bound(VertexSet cand) const {
        int cliques = 0;
        while (true) {
            int v = cand.first();
            if (v < 0) break;
            ++cliques;
            // Grow a clique greedily from v inside cand.
            VertexSet common = cand & g.neighbors(v);
            cand.reset(v);
            while (true) {
                int u = common.first();
                if (u < 0) break;
                cand.reset(u);
                common &= g.neighbors(u);
            }
        }
        return cliques;
    }

    void dfs(VertexSet cand, VertexSet chosen, int size) {
        if (out_of_budget || (stop_at >= 0 && best >= stop_at)) return;
        if (++nodes > budget) {
            out_of_budget = true;
            return;
        }
        if (size > best) {
            best = size;
            best_set = chosen;
            if (stop_at >= 0 && best >= stop_at) return;
        }
        if (cand.empty()) return;
        int limit = (stop_at >= 0) ? std::min(stop_at, best + 1) : best + 1;
        if (size + clique_cover_bound(cand) < limit) return;

        // Branch on a maximum-degree vertex within the candidate subgraph.
        int pick = -1, pick_deg = -1;
        for (int v = cand.first(); v >= 0; v = cand.next(v)) {
            int d = g.neighbors(v).intersection_count(cand);
            if (d > pick_deg) {
                pick_deg = d;
                pick = v;
            }
        }
        // Include pick.
        VertexSet with = cand - g.neighbors(pick);
        with.reset(pick);
        chosen.set(pick);
        dfs(with, chosen, size + 1);
        chosen.reset(pick);
        // Exclude pick.
        cand.reset(pick);
        dfs(cand, chosen, size);
    }
};

}  // namespace

IndependenceResult independence_number(const Graph& g, std::uint64_t node_budget) {
    Searcher s(g, node_budget);
    s.dfs(VertexSet::full(g.n()), VertexSet(g.n()), 0);
    IndependenceResult r;
    r.alpha = std::max(s.best, 0);
    r.witness = s.best_set;
    r.nodes = s.nodes;
    r.status = s.out_of_budget ? IndependenceResult::Status::BudgetExceeded
                               : IndependenceResult::Status::Exact;
    return r;
}

std::optional<ThresholdAnswer> independence_exceeds(const Graph& g, int t,
                                                    std::uint64_t node_budget) {
    if (t < 0) return ThresholdAnswer{true, VertexSet(g.n()), 0};  // alpha >= 0 > t
    if (t >= g.n()) return ThresholdAnswer{false, VertexSet(g.n()), 0};
    Searcher s(g, node_budget);
    s.stop_at = t + 1;
    s.dfs(VertexSet::full(g.n()), VertexSet(g.n()), 0);
    if (s.best >= t + 1) return ThresholdAnswer{true, s.best_set, s.nodes};
    if (s.out_of_budget) return std::nullopt;
    return ThresholdAnswer{false, VertexSet(g.n()), s.nodes};
}

}  // namespace cyclepack
