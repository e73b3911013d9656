#include "cyclepack/oracle.hpp"

#include <algorithm>

namespace cyclepack {

namespace {

struct SimpleSearch {
    const Graph& g;
    std::uint64_t budget;
    int stop_at;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;
    bool stop_hit = false;
    int best;
    std::vector<std::vector<int>> best_witness;
    std::vector<std::vector<int>> stack;

    SimpleSearch(const Graph& g_, const OracleOptions& opt)
        : g(g_),
          budget(opt.node_budget),
          stop_at(opt.stop_at),
          best(opt.seed_lower_bound) {}

    bool done() const { return out_of_budget || stop_hit; }

    bool tick() {
        if (++nodes > budget) out_of_budget = true;
        return !done();
    }

    void record(int count) {
        if (count > best) {
            best = count;
            best_witness = stack;
            if (stop_at > 0 && best >= stop_at) stop_hit = true;
        }
    }

    // Greedy independent set: every cycle uses >= 2 vertices outside any
    // independent set, so count + |avail \ I| / 2 bounds the reachable total.
    int independent_bound(const VertexSet& avail) const {
        VertexSet cand = avail;
        int size = 0;
        while (true) {
            int v = cand.first();
            if (v < 0) break;
            ++size;
            cand.reset(v);
            cand -= g.neighbors(v);
        }
        return (avail.count() - size) / 2;
    }

    void search(VertexSet avail, int count) {
        if (done() || !tick()) return;
        record(count);
        int remaining = avail.count();
        if (remaining < 3) return;
        int bound = remaining / 3;
        if (count + bound <= best) return;
        bound = std::min(bound, independent_bound(avail));
        if (count + bound <= best) return;

        int v = avail.first();
        // Include branch: every cycle through v, shortest first. A cycle of
        // length len leaves at most (remaining - len) / 3 further cycles, so
        // lengths past that break-even point cannot beat the incumbent.
        std::vector<int> path{v};
        VertexSet on_path(g.n());
        on_path.set(v);
        for (int len = 3; len <= remaining && !done(); ++len) {
            if (count + 1 + (remaining - len) / 3 <= best) break;
            extend(avail, count, v, path, on_path, len);
        }
        // Exclude branch.
        if (done()) return;
        avail.reset(v);
        search(avail, count);
    }

    void extend(const VertexSet& avail, int count, int last, std::vector<int>& path,
                VertexSet& on_path, int target_len) {
        if (done() || !tick()) return;
        int anchor = path[0];
        if (int(path.size()) == target_len) {
            if (g.has_edge(last, anchor) && path[1] < path.back()) {
                stack.push_back(path);
                VertexSet rest = avail - on_path;
                search(rest, count + 1);
                stack.pop_back();
            }
            return;
        }
        for (int q = g.neighbors(last).next(anchor); q >= 0 && !done();
             q = g.neighbors(last).next(q)) {
            if (!avail.test(q) || on_path.test(q)) continue;
            path.push_back(q);
            on_path.set(q);
            extend(avail, count, q, path, on_path, target_len);
            on_path.reset(q);
            path.pop_back();
        }
    }
};

}  // namespace

OracleResult oracle_max_packing(const Graph& g, const OracleOptions& opt) {
    SimpleSearch s(g, opt);
    VertexSet avail = opt.allowed ? *opt.allowed : VertexSet::full(g.n());
    s.search(avail, 0);
    OracleResult r;
    r.max_cycles = s.best;
    r.witness = std::move(s.best_witness);
    r.nodes = s.nodes;
    r.status = s.stop_hit        ? OracleResult::Status::StopReached
               : s.out_of_budget ? OracleResult::Status::BudgetExceeded
                                 : OracleResult::Status::Exact;
    return r;
}

namespace {

struct MultiSearch {
    const Multigraph& m;
    std::uint64_t budget;
    int stop_at;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;
    bool stop_hit = false;
    int best = 0;
    std::vector<std::vector<int>> best_witness;
    std::vector<std::vector<int>> stack;

    MultiSearch(const Multigraph& m_, const OracleOptions& opt)
        : m(m_), budget(opt.node_budget), stop_at(opt.stop_at), best(opt.seed_lower_bound) {}

    bool done() const { return out_of_budget || stop_hit; }
    bool tick() {
        if (++nodes > budget) out_of_budget = true;
        return !done();
    }
    void record(int count) {
        if (count > best) {
            best = count;
            best_witness = stack;
            if (stop_at > 0 && best >= stop_at) stop_hit = true;
        }
    }

    void search(std::vector<char>& avail, int count) {
        if (done() || !tick()) return;
        record(count);
        int v = -1;
        for (int u = 0; u < m.n(); ++u)
            if (avail[u]) { v = u; break; }
        if (v < 0) return;

        // Cycles through v in footprint order: loop, parallel pair, then
        // simple cycles of increasing length.
        if (m.loops(v) > 0) {
            stack.push_back({v});
            avail[v] = 0;
            search(avail, count + 1);
            avail[v] = 1;
            stack.pop_back();
            if (done()) return;
        }
        for (int u = 0; u < m.n() && !done(); ++u) {
            if (u == v || !avail[u] || m.multiplicity(v, u) < 2) continue;
            stack.push_back({v, u});
            avail[v] = avail[u] = 0;
            search(avail, count + 1);
            avail[v] = avail[u] = 1;
            stack.pop_back();
        }
        int remaining = 0;
        for (int u = 0; u < m.n(); ++u) remaining += avail[u];
        std::vector<int> path{v};
        std::vector<char> on_path(m.n(), 0);
        on_path[v] = 1;
        for (int len = 3; len <= remaining && !done(); ++len)
            extend(avail, count, v, path, on_path, len);
        if (done()) return;
        avail[v] = 0;
        search(avail, count);
        avail[v] = 1;
    }

    void extend(std::vector<char>& avail, int count, int last, std::vector<int>& path,
                std::vector<char>& on_path, int target_len) {
        if (done() || !tick()) return;
        int anchor = path[0];
        if (int(path.size()) == target_len) {
            if (m.multiplicity(last, anchor) > 0 && path[1] < path.back()) {
                stack.push_back(path);
                for (int w : path) avail[w] = 0;
                search(avail, count + 1);
                for (int w : path) avail[w] = 1;
                stack.pop_back();
            }
            return;
        }
        for (int q = anchor + 1; q < m.n() && !done(); ++q) {
            if (!avail[q] || on_path[q] || m.multiplicity(last, q) == 0) continue;
            path.push_back(q);
            on_path[q] = 1;
            extend(avail, count, q, path, on_path, target_len);
            on_path[q] = 0;
            path.pop_back();
        }
    }
};

}  // namespace

OracleResult oracle_max_packing(const Multigraph& m, const OracleOptions& opt) {
    MultiSearch s(m, opt);
    std::vector<char> avail(m.n(), 1);
    if (opt.allowed)
        for (int v = 0; v < m.n(); ++v) avail[v] = opt.allowed->test(v) ? 1 : 0;
    s.search(avail, 0);
    OracleResult r;
    r.max_cycles = s.best;
    r.witness = std::move(s.best_witness);
    r.nodes = s.nodes;
    r.status = s.stop_hit        ? OracleResult::Status::StopReached
               : s.out_of_budget ? OracleResult::Status::BudgetExceeded
                                 : OracleResult::Status::Exact;
    return r;
}

}  // namespace cyclepack
