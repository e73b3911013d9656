#include "cyclepack/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "cyclepack/graph6.hpp"

namespace cyclepack {

namespace {

using Partition = std::vector<std::vector<int>>;

// Split every cell by the vector of neighbor counts into current cells;
// iterate to a fixed point. New cells are ordered by signature, which keeps
// the partition order isomorphism-invariant.
void refine(const Graph& g, Partition& part) {
    bool changed = true;
    while (changed) {
        changed = false;
        Partition next;
        next.reserve(part.size());
        std::vector<VertexSet> cell_sets;
        cell_sets.reserve(part.size());
        for (const auto& cell : part) cell_sets.push_back(VertexSet::of(g.n(), cell));
        for (const auto& cell : part) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::vector<std::pair<std::vector<int>, int>> sigs;
            sigs.reserve(cell.size());
            for (int v : cell) {
                std::vector<int> sig;
                sig.reserve(cell_sets.size());
                for (const auto& cs : cell_sets)
                    sig.push_back(g.neighbors(v).intersection_count(cs));
                sigs.emplace_back(std::move(sig), v);
            }
            std::sort(sigs.begin(), sigs.end());
            std::vector<int> group{sigs[0].second};
            for (std::size_t i = 1; i < sigs.size(); ++i) {
                if (sigs[i].first != sigs[i - 1].first) {
                    next.push_back(group);
                    group.clear();
                    changed = true;
                }
                group.push_back(sigs[i].second);
            }
            next.push_back(std::move(group));
        }
        part = std::move(next);
    }
}

struct CanonSearch {
    const Graph& g;
    std::string best;
    bool have_best = false;

    explicit CanonSearch(const Graph& g_) : g(g_) {}

    // u,v interchangeable by an automorphism fixing everything else.
    bool twins(int u, int v) const {
        VertexSet a = g.neighbors(u);
        VertexSet b = g.neighbors(v);
        a.reset(v);
        b.reset(u);
        return a == b;
    }

    void leaf(const Partition& part) {
        std::vector<int> order;
        order.reserve(part.size());
        for (const auto& cell : part) order.push_back(cell[0]);
        std::string bits;
        bits.reserve(std::size_t(g.n()) * (g.n() - 1) / 2);
        for (int v = 1; v < g.n(); ++v)
            for (int u = 0; u < v; ++u)
                bits.push_back(g.has_edge(order[u], order[v]) ? '1' : '0');
        if (!have_best || bits < best) {
            best = std::move(bits);
            have_best = true;
        }
    }

    void descend(Partition part) {
        refine(g, part);
        std::size_t target = 0;
        while (target < part.size() && part[target].size() == 1) ++target;
        if (target == part.size()) {
            leaf(part);
            return;
        }
        const std::vector<int> cell = part[target];
        std::vector<int> candidates;
        for (std::size_t i = 0; i < cell.size(); ++i) {
            bool dup = false;
            for (std::size_t j = 0; j < i && !dup; ++j) dup = twins(cell[i], cell[j]);
            if (!dup) candidates.push_back(cell[i]);
        }
        for (int v : candidates) {
            Partition child;
            child.reserve(part.size() + 1);
            for (std::size_t i = 0; i < part.size(); ++i) {
                if (i == target) {
                    child.push_back({v});
                    std::vector<int> rest;
                    for (int u : cell)
                        if (u != v) rest.push_back(u);
                    child.push_back(std::move(rest));
                } else {
                    child.push_back(part[i]);
                }
            }
            descend(std::move(child));
        }
    }
};

}  // namespace

std::string canonical_string(const Graph& g) {
    if (g.n() == 0) return "0:";
    CanonSearch cs(g);
    std::vector<int> all(g.n());
    for (int v = 0; v < g.n(); ++v) all[v] = v;
    cs.descend({all});
    return std::to_string(g.n()) + ":" + cs.best;
}

std::string canonical_graph6(const Graph& g) {
    std::string s = canonical_string(g);
    std::string bits = s.substr(s.find(':') + 1);
    std::vector<std::pair<int, int>> es;
    std::size_t i = 0;
    for (int v = 1; v < g.n(); ++v)
        for (int u = 0; u < v; ++u, ++i)
            if (bits[i] == '1') es.emplace_back(u, v);
    return emit_graph6(Graph(g.n(), es));
}

namespace {

// Allocation-free search state for canonical_key.
struct KeySearch {
    int n = 0;
    int total_bits = 0;
    std::array<std::uint16_t, 11> adj{};
    // Cells of the refined partition, consumed in order: cell_of_slot[d] is
    // the cell whose members compete for slot d.
    std::array<std::uint8_t, 11> cell_of_slot{};
    std::array<std::uint16_t, 11> cell_members{};  // mask of unplaced members
    std::array<int, 11> order{};
    std::uint64_t best = ~0ull;

    void run(int depth, std::uint64_t acc, int bits) {
        if (depth == n) {
            best = std::min(best, acc);
            return;
        }
        const int cell = cell_of_slot[depth];
        std::uint16_t cands = cell_members[cell];
        std::uint16_t tried = 0;
        while (cands) {
            const int v = std::countr_zero(cands);
            cands &= cands - 1;
            // Twins already tried lead to an identical subtree.
            bool dup = false;
            for (std::uint16_t t = tried; t && !dup; t &= t - 1) {
                const int u = std::countr_zero(t);
                dup = (adj[u] & ~(std::uint16_t(1) << v)) ==
                      (adj[v] & ~(std::uint16_t(1) << u));
            }
            tried |= std::uint16_t(1) << v;
            if (dup) continue;
            std::uint64_t col = 0;
            for (int i = 0; i < depth; ++i)
                col = col << 1 | ((adj[v] >> order[i]) & 1u);
            const std::uint64_t acc2 = acc << depth | col;
            const int bits2 = bits + depth;
            if (acc2 > (best >> (total_bits - bits2))) continue;
            order[depth] = v;
            cell_members[cell] &= ~(std::uint16_t(1) << v);
            run(depth + 1, acc2, bits2);
            cell_members[cell] |= std::uint16_t(1) << v;
        }
    }
};

}  // namespace

std::uint64_t canonical_key(const Graph& g) {
    const int n = g.n();
    if (n > 11) throw std::invalid_argument("canonical_key: n must be at most 11");
    std::array<std::uint16_t, 11> adj{};
    for (int v = 0; v < n; ++v)
        for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u))
            adj[v] |= std::uint16_t(1) << u;
    return canonical_key(adj.data(), n);
}

std::uint64_t canonical_key(const std::uint16_t* adj, int n) {
    if (n > 11) throw std::invalid_argument("canonical_key: n must be at most 11");
    if (n <= 1) return 0;

    KeySearch ks;
    ks.n = n;
    ks.total_bits = n * (n - 1) / 2;
    for (int v = 0; v < n; ++v) ks.adj[v] = adj[v];

    // Refine {V} into an ordered partition by iterated neighbor-count
    // signatures; the cell order is determined by the signatures alone, so it
    // is isomorphism-invariant.
    std::array<std::uint8_t, 11> color{};
    int num_colors = 1;
    for (;;) {
        std::array<std::uint16_t, 11> color_mask{};
        for (int v = 0; v < n; ++v) color_mask[color[v]] |= std::uint16_t(1) << v;
        // signature: old color, then neighbor count in each color class
        std::array<std::array<std::uint8_t, 12>, 11> sig{};
        for (int v = 0; v < n; ++v) {
            sig[v][0] = color[v];
            for (int c = 0; c < num_colors; ++c)
                sig[v][c + 1] = std::uint8_t(std::popcount(std::uint32_t(ks.adj[v] & color_mask[c])));
        }
        std::array<int, 11> by_sig{};
        for (int v = 0; v < n; ++v) by_sig[v] = v;
        std::sort(by_sig.begin(), by_sig.begin() + n,
                  [&](int a, int b) { return sig[a] < sig[b]; });
        std::array<std::uint8_t, 11> next_color{};
        int next_num = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sig[by_sig[i]] != sig[by_sig[i - 1]]) ++next_num;
            next_color[by_sig[i]] = std::uint8_t(next_num);
        }
        ++next_num;
        if (next_num == num_colors) break;
        color = next_color;
        num_colors = next_num;
        if (num_colors == n) break;
    }

    for (int v = 0; v < n; ++v) ks.cell_members[color[v]] |= std::uint16_t(1) << v;
    int slot = 0;
    for (int c = 0; c < num_colors; ++c)
        for (int i = std::popcount(std::uint32_t(ks.cell_members[c])); i > 0; --i)
            ks.cell_of_slot[slot++] = std::uint8_t(c);

    ks.run(0, 0, 0);
    return ks.best;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.n(); ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.n(); ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_string(a) == canonical_string(b);
}

}  // namespace cyclepack
