#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "cyclepack/families.hpp"
#include "cyclepack/graph.hpp"
#include "cyclepack/graph6.hpp"
#include "cyclepack/vertex_set.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cyclepack;

namespace {

Graph complete(int n) { return named_family({FamilyKind::CompleteK, n}); }

std::vector<Graph> sample_pool() {
    std::vector<Graph> pool;
    pool.push_back(Graph(1, {}));
    pool.push_back(Graph(5, {}));
    pool.push_back(complete(4));
    pool.push_back(named_family({FamilyKind::Cycle, 7}));
    pool.push_back(named_family({FamilyKind::Wheel, 6}));
    pool.push_back(named_family({FamilyKind::Y1}));
    pool.push_back(named_family({FamilyKind::Y2}));
    pool.push_back(named_family({FamilyKind::Gk, 3}));
    pool.push_back(named_family({FamilyKind::CompleteBipartite, 3, 5}));
    pool.push_back(named_family({FamilyKind::TwoKkJoinKkBar, 3}));
    for (std::uint64_t s = 1; s <= 20; ++s)
        pool.push_back(testutil::random_graph(3 + int(s % 9), 400, s));
    return pool;
}

}  // namespace

TEST_CASE("graph construction and basic queries") {
    GraphBuilder b(4);
    b.add_edge(0, 1).add_edge(1, 2).add_edge(2, 3).add_edge(3, 0);
    Graph g = b.build();
    CHECK(g.n() == 4);
    CHECK(g.edge_count() == 4);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK(g.degree(0) == 2);

    SUBCASE("duplicate edges collapse") {
        Graph h(3, {{0, 1}, {1, 0}, {0, 1}});
        CHECK(h.edge_count() == 1);
        CHECK(h.degree(0) == 1);
    }
    SUBCASE("invalid edges are rejected") {
        CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
        CHECK_THROWS_AS(Graph(3, {{-1, 0}}), std::invalid_argument);
        CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
        CHECK_THROWS_AS(Graph(-1, {}), std::invalid_argument);
    }
}

TEST_CASE("adjacency is symmetric and loop-free after every constructor") {
    for (const Graph& g : sample_pool()) {
        for (int v = 0; v < g.n(); ++v) {
            CHECK_FALSE(g.has_edge(v, v));
            for (int u = 0; u < g.n(); ++u) CHECK(g.has_edge(u, v) == g.has_edge(v, u));
        }
        long long deg_sum = 0;
        for (int v = 0; v < g.n(); ++v) deg_sum += g.degree(v);
        CHECK(deg_sum == 2 * g.edge_count());
    }
}

TEST_CASE("degree statistics") {
    SUBCASE("complete graph") {
        DegreeStats st = degree_stats(complete(4));
        CHECK(st.delta == 3);
        CHECK(st.max_degree == 3);
        CHECK(st.sigma2 == DegreeStats::sigma2_infinity);
        CHECK(st.theta == 6);
    }
    SUBCASE("cycle") {
        DegreeStats st = degree_stats(named_family({FamilyKind::Cycle, 5}));
        CHECK(st.delta == 2);
        CHECK(st.sigma2 == 4);
        CHECK(st.theta == 4);
    }
    SUBCASE("edgeless graph") {
        DegreeStats st = degree_stats(Graph(4, {}));
        CHECK(st.delta == 0);
        CHECK(st.sigma2 == 0);
        CHECK(st.theta == DegreeStats::theta_undefined);
    }
    SUBCASE("star") {
        Graph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
        DegreeStats st = degree_stats(star);
        CHECK(st.delta == 1);
        CHECK(st.max_degree == 4);
        CHECK(st.sigma2 == 2);  // two leaves
        CHECK(st.theta == 5);   // hub + leaf
    }
    SUBCASE("degree-sum sandwich on every sample graph") {
        for (const Graph& g : sample_pool()) {
            if (g.n() == 0) continue;
            DegreeStats st = degree_stats(g);
            CHECK(st.delta * (long long)g.n() <= 2 * g.edge_count());
            CHECK(2 * g.edge_count() <= st.max_degree * (long long)g.n());
        }
    }
}

TEST_CASE("edges_between endpoint-pair convention") {
    for (const Graph& g : sample_pool()) {
        VertexSet all = VertexSet::full(g.n());
        CHECK(edges_between(g, all, all) == 2 * g.edge_count());
        if (g.n() >= 4) {
            VertexSet a(g.n()), b(g.n());
            for (int v = 0; v < g.n(); ++v) (v % 2 ? a : b).set(v);
            CHECK(edges_between(g, a, b) == edges_between(g, b, a));
            long long cross = edges_between(g, a, b);
            long long within_a = edges_between(g, a, a) / 2;
            long long within_b = edges_between(g, b, b) / 2;
            CHECK(cross + within_a + within_b == g.edge_count());
        }
    }
}

TEST_CASE("complement") {
    for (const Graph& g : sample_pool()) {
        Graph co = complement(g);
        CHECK(co.n() == g.n());
        CHECK(g.edge_count() + co.edge_count() == (long long)g.n() * (g.n() - 1) / 2);
        CHECK(complement(co).adjacency_bits() == g.adjacency_bits());
    }
}

TEST_CASE("disjoint union and join") {
    Graph k3 = complete(3);
    Graph u = disjoint_union(k3, k3);
    CHECK(u.n() == 6);
    CHECK(u.edge_count() == 6);
    CHECK_FALSE(u.has_edge(0, 3));

    Graph j = join(Graph(2, {}), Graph(3, {}));
    CHECK(j.n() == 5);
    CHECK(j.edge_count() == 6);  // complete bipartite K_{2,3}
    CHECK(j.has_edge(0, 2));
    CHECK_FALSE(j.has_edge(0, 1));
    CHECK_FALSE(j.has_edge(2, 3));
}

TEST_CASE("blowup order and degrees") {
    Graph c5 = named_family({FamilyKind::Cycle, 5});
    Graph h(3, {{0, 1}});  // one edge plus an isolated vertex
    Graph b = blowup(c5, h);
    CHECK(b.n() == 15);
    for (int x = 0; x < 5; ++x)
        for (int y = 0; y < 3; ++y)
            CHECK(b.degree(x * 3 + y) == c5.degree(x) * 3 + h.degree(y));
    // Cross edges follow the outer graph, intra-copy edges the inner one.
    CHECK(b.has_edge(0 * 3 + 0, 1 * 3 + 2));
    CHECK_FALSE(b.has_edge(0 * 3 + 0, 2 * 3 + 0));
    CHECK(b.has_edge(2 * 3 + 0, 2 * 3 + 1));
    CHECK_FALSE(b.has_edge(2 * 3 + 0, 2 * 3 + 2));
}

TEST_CASE("induced subgraph and relabel") {
    Graph y1 = named_family({FamilyKind::Y1});
    VertexSet first8 = VertexSet::of(10, {0, 1, 2, 3, 4, 5, 6, 7});
    Graph sub = induced_subgraph(y1, first8);
    CHECK(sub.n() == 8);
    CHECK(sub.edge_count() == 27);  // K8 minus one edge

    std::vector<int> perm = testutil::random_permutation(10, 7);
    Graph rel = relabel(y1, perm);
    CHECK(rel.n() == 10);
    CHECK(rel.edge_count() == y1.edge_count());
    for (auto [u, v] : y1.edges()) CHECK(rel.has_edge(perm[u], perm[v]));
}

TEST_CASE("graph6 codec") {
    SUBCASE("known encodings") {
        Graph k3 = parse_graph6("Bw");
        CHECK(k3.n() == 3);
        CHECK(k3.edge_count() == 3);
        CHECK(emit_graph6(complete(3)) == "Bw");
        CHECK(emit_graph6(Graph(2, {})) == "A?");
        Graph p = parse_graph6("A?");
        CHECK(p.n() == 2);
        CHECK(p.edge_count() == 0);
    }
    SUBCASE("round trip on the sample pool") {
        for (const Graph& g : sample_pool()) {
            Graph back = parse_graph6(emit_graph6(g));
            CHECK(back.n() == g.n());
            CHECK(back.adjacency_bits() == g.adjacency_bits());
        }
    }
    SUBCASE("round trip across the long-form header boundary") {
        for (int n : {62, 63, 64, 70}) {
            Graph g = testutil::random_graph(n, 80, std::uint64_t(n));
            std::string line = emit_graph6(g);
            if (n <= 62)
                CHECK(line[0] == char(n + 63));
            else
                CHECK(line[0] == '~');
            Graph back = parse_graph6(line);
            CHECK(back.n() == n);
            CHECK(back.adjacency_bits() == g.adjacency_bits());
        }
    }
    SUBCASE("tolerates the standard prefix and trailing whitespace") {
        Graph g = parse_graph6(">>graph6<<Bw\r\n");
        CHECK(g.edge_count() == 3);
    }
    SUBCASE("malformed inputs raise Graph6Error") {
        CHECK_THROWS_AS(parse_graph6(""), Graph6Error);
        CHECK_THROWS_AS(parse_graph6("B"), Graph6Error);        // truncated payload
        CHECK_THROWS_AS(parse_graph6("Bww"), Graph6Error);      // trailing bytes
        CHECK_THROWS_AS(parse_graph6("B\x01"), Graph6Error);    // byte out of range
        CHECK_THROWS_AS(parse_graph6("A^"), Graph6Error);       // nonzero padding bits
        CHECK_THROWS_AS(parse_graph6("~~"), Graph6Error);       // oversized header form
    }
    SUBCASE("padding bits must be zero") {
        // n=4 has 6 payload bits exactly; n=5 has 10 bits, 2 padding bits.
        std::string line = emit_graph6(complete(5));
        line.back() = char((line.back() - 63) | 1) + 63;  // set a padding bit
        CHECK_THROWS_AS(parse_graph6(line), Graph6Error);
    }
}

TEST_CASE("edge list codec") {
    Graph k3 = parse_edge_list("# triangle\n0 1\n\n1 2\n 2 0\n");
    CHECK(k3.n() == 3);
    CHECK(k3.edge_count() == 3);
    for (const Graph& g : sample_pool()) {
        if (g.edge_count() == 0) continue;  // vertex count is not representable
        Graph back = parse_edge_list(emit_edge_list(g));
        CHECK(back.edge_count() == g.edge_count());
        for (auto [u, v] : g.edges()) CHECK(back.has_edge(u, v));
    }
    CHECK_THROWS_AS(parse_edge_list("0 0\n"), Graph6Error);
    CHECK_THROWS_AS(parse_edge_list("0\n"), Graph6Error);
    CHECK_THROWS_AS(parse_edge_list("0 1 2\n"), Graph6Error);
}

TEST_CASE("vertex set operations") {
    VertexSet s(70);
    s.set(0);
    s.set(63);
    s.set(64);
    CHECK(s.count() == 3);
    CHECK(s.first() == 0);
    CHECK(s.next(0) == 63);
    CHECK(s.next(63) == 64);
    CHECK(s.next(64) == -1);
    CHECK(s.test(63));
    s.reset(63);
    CHECK_FALSE(s.test(63));

    VertexSet a = VertexSet::of(10, {1, 2, 3});
    VertexSet b = VertexSet::of(10, {3, 4});
    CHECK((a & b).to_vector() == std::vector<int>{3});
    CHECK((a | b).count() == 4);
    CHECK((a - b).to_vector() == std::vector<int>{1, 2});
    CHECK(a.intersects(b));
    CHECK(a.intersection_count(b) == 1);
    CHECK(VertexSet::of(10, {1, 2}).is_subset_of(a));
    CHECK_FALSE(a.is_subset_of(b));
    CHECK(VertexSet::full(10).count() == 10);
    CHECK(VertexSet(5).empty());
}
