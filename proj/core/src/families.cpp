#include "cyclepack/families.hpp"

#include <stdexcept>

namespace cyclepack {

namespace {

Graph complete(int n) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return Graph(n, es);
}

Graph empty_graph(int n) { return Graph(n, {}); }

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    std::vector<std::pair<int, int>> es;
    for (int v = 0; v < n; ++v) es.emplace_back(v, (v + 1) % n);
    return Graph(n, es);
}

Graph complete_bipartite(int s, int t) {
    if (s < 0 || t < 0) throw std::invalid_argument("complete_bipartite: negative part");
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < s; ++u)
        for (int v = 0; v < t; ++v) es.emplace_back(u, s + v);
    return Graph(s + t, es);
}

Graph wheel(int n) {
    if (n < 4) throw std::invalid_argument("wheel: need n >= 4");
    std::vector<std::pair<int, int>> es;
    for (int v = 1; v < n; ++v) {
        es.emplace_back(0, v);
        es.emplace_back(v, v == n - 1 ? 1 : v + 1);
    }
    return Graph(n, es);
}

// K8 on 0..7 with the edge {6,7} removed and replaced by the path 6-8-9-7.
Graph y1() {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < 8; ++u)
        for (int v = u + 1; v < 8; ++v)
            if (!(u == 6 && v == 7)) es.emplace_back(u, v);
    es.emplace_back(6, 8);
    es.emplace_back(8, 9);
    es.emplace_back(9, 7);
    return Graph(10, es);
}

// Q = K_{4,4} on classes {v,a1,a2,a3} x {w,x,y,z} with v (the first vertex of
// the first class) replaced by the edge uu', u adjacent to w,x and u' to y,z.
// Y2 = K1 joined to Q. Numbering: u=0, u'=1, a1..a3=2..4, w..z=5..8, apex=9.
Graph y2() {
    std::vector<std::pair<int, int>> es;
    es.emplace_back(0, 1);
    es.emplace_back(0, 5);
    es.emplace_back(0, 6);
    es.emplace_back(1, 7);
    es.emplace_back(1, 8);
    for (int a = 2; a <= 4; ++a)
        for (int b = 5; b <= 8; ++b) es.emplace_back(a, b);
    for (int v = 0; v <= 8; ++v) es.emplace_back(v, 9);
    return Graph(10, es);
}

Graph gk(int k) {
    if (k < 3) throw std::invalid_argument("Gk: need k >= 3");
    return join(empty_graph(2 * k - 2), disjoint_union(empty_graph(2 * k - 3), complete(3)));
}

}  // namespace

Graph named_family(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::Y1:
            return y1();
        case FamilyKind::Y2:
            return y2();
        case FamilyKind::Gk:
            return gk(spec.a);
        case FamilyKind::GkExtended: {
            int r = spec.a, t = spec.b;
            if (t < 1 || r < t + 3)
                throw std::invalid_argument("GkExtended: need t >= 1 and r >= t+3");
            return join(gk(r), complete(2 * t));
        }
        case FamilyKind::C5BlowupK3bar:
            return blowup(cycle(5), empty_graph(3));
        case FamilyKind::C5BlowupExtended: {
            int k = spec.a;
            if (k < 4 || k > 6)
                throw std::invalid_argument("C5BlowupExtended: need 4 <= k <= 6");
            return join(blowup(cycle(5), empty_graph(3)), empty_graph(2 * k - 8));
        }
        case FamilyKind::Hsharp: {
            int k = spec.a;
            if (k < 2) throw std::invalid_argument("Hsharp: need k >= 2");
            return join(empty_graph(k + 1), complete(2 * k - 1));
        }
        case FamilyKind::TwoKkJoinKkBar: {
            int k = spec.a;
            if (k < 1) throw std::invalid_argument("TwoKkJoinKkBar: need k >= 1");
            return join(disjoint_union(complete(k), complete(k)), empty_graph(k));
        }
        case FamilyKind::Wheel:
            return wheel(spec.a);
        case FamilyKind::CompleteK:
            if (spec.a < 0) throw std::invalid_argument("CompleteK: negative n");
            return complete(spec.a);
        case FamilyKind::CompleteBipartite:
            return complete_bipartite(spec.a, spec.b);
        case FamilyKind::Cycle:
            return cycle(spec.a);
        case FamilyKind::KkkPlusKk: {
            int k = spec.a;
            if (k < 1) throw std::invalid_argument("KkkPlusKk: need k >= 1");
            return disjoint_union(complete_bipartite(k, k), complete(k));
        }
    }
    throw std::invalid_argument("named_family: unknown kind");
}

std::string family_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::Y1: return "y1";
        case FamilyKind::Y2: return "y2";
        case FamilyKind::Gk: return "gk";
        case FamilyKind::GkExtended: return "gk-extended";
        case FamilyKind::C5BlowupK3bar: return "c5-blowup";
        case FamilyKind::C5BlowupExtended: return "c5-blowup-extended";
        case FamilyKind::Hsharp: return "hsharp";
        case FamilyKind::TwoKkJoinKkBar: return "two-kk-join-kkbar";
        case FamilyKind::Wheel: return "wheel";
        case FamilyKind::CompleteK: return "complete";
        case FamilyKind::CompleteBipartite: return "complete-bipartite";
        case FamilyKind::Cycle: return "cycle";
        case FamilyKind::KkkPlusKk: return "kkk-plus-kk";
    }
    return "unknown";
}

}  // namespace cyclepack
