#include "cyclepack/packing.hpp"

#include <sstream>

namespace cyclepack {

void CyclePacking::rebuild_remainder(int n) {
    remainder = VertexSet::full(n);
    for (const auto& c : cycles)
        for (int v : c) remainder.reset(v);
}

ValidationResult validate_packing(const Graph& g, const CyclePacking& p) {
    auto fail = [](const std::string& why) { return ValidationResult{false, why}; };
    VertexSet used(g.n());
    for (std::size_t i = 0; i < p.cycles.size(); ++i) {
        const auto& c = p.cycles[i];
        std::ostringstream tag;
        tag << "cycle " << i;
        if (c.size() < 3) return fail(tag.str() + ": fewer than 3 vertices");
        for (int v : c)
            if (v < 0 || v >= g.n()) return fail(tag.str() + ": vertex out of range");
        for (std::size_t j = 0; j < c.size(); ++j) {
            int v = c[j];
            if (used.test(v)) return fail(tag.str() + ": vertex reused");
            used.set(v);
            int w = c[(j + 1) % c.size()];
            if (!g.has_edge(v, w)) return fail(tag.str() + ": missing edge");
        }
    }
    VertexSet expected = VertexSet::full(g.n());
    expected -= used;
    if (!(p.remainder == expected)) return fail("remainder is not the cycle complement");
    return {};
}

bool key_improves(const OptimalityKey& base, const OptimalityKey& cand) {
    if (cand.o1 != base.o1) return cand.o1 > base.o1;
    if (cand.o2 != base.o2) return cand.o2 < base.o2;
    if (cand.o3 != base.o3) return cand.o3 > base.o3;
    return cand.o4 > base.o4;
}

OptimalityKey optimality_key(const Graph& g, const CyclePacking& p,
                             std::uint64_t longest_path_budget) {
    OptimalityKey key;
    key.o1 = int(p.cycles.size());
    key.o2 = p.total_cycle_length();
    LongestPathResult lp = longest_path(g, p.remainder, longest_path_budget);
    key.o3 = lp.vertices;
    key.o3_exact = lp.exact;
    key.o4 = edges_between(g, p.remainder, p.remainder) / 2;
    return key;
}

}  // namespace cyclepack
