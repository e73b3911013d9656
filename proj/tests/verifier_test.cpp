#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclepack/families.hpp"
#include "cyclepack/graph.hpp"
#include "cyclepack/graph6.hpp"
#include "cyclepack/isomorphism.hpp"
#include "cyclepack/verifier.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cyclepack;

TEST_CASE("enumeration produces every isomorphism class exactly once") {
    const std::vector<std::size_t> expected{1, 1, 2, 4, 11, 34, 156, 1044};
    for (int n = 0; n <= 7; ++n) {
        std::vector<Graph> all = enumerate_graphs(n);
        CHECK(all.size() == expected[std::size_t(n)]);
        std::set<std::string> canon;
        for (const Graph& g : all) {
            CHECK(g.n() == n);
            canon.insert(canonical_string(g));
        }
        CHECK(canon.size() == all.size());  // pairwise non-isomorphic
    }
    CHECK_THROWS_AS(enumerate_graphs(11), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_graphs(-1), std::invalid_argument);
}

TEST_CASE("enumeration filters cut exactly the advertised graphs") {
    EnumerationFilter tri;
    tri.min_degree = 2;
    std::vector<Graph> dense3 = enumerate_graphs(3, tri);
    REQUIRE(dense3.size() == 1);
    CHECK(dense3[0].edge_count() == 3);  // only K3 survives

    // Independent replication at n = 6, min degree 4: dedup all labeled
    // graphs by canonical form and compare class sets.
    EnumerationFilter f;
    f.min_degree = 4;
    std::vector<Graph> got = enumerate_graphs(6, f);
    std::set<std::string> got_canon;
    for (const Graph& g : got) {
        DegreeStats st = degree_stats(g);
        CHECK(st.delta >= 4);
        got_canon.insert(canonical_string(g));
    }
    REQUIRE(got_canon.size() == got.size());
    std::set<std::string> expect_canon;
    for (std::uint32_t bits = 0; bits < (1u << 15); ++bits) {
        std::vector<std::pair<int, int>> edges;
        int idx = 0;
        for (int v = 1; v < 6; ++v)
            for (int u = 0; u < v; ++u, ++idx)
                if (bits & (1u << idx)) edges.emplace_back(u, v);
        Graph g(6, edges);
        bool ok = true;
        for (int v = 0; v < 6 && ok; ++v) ok = g.degree(v) >= 4;
        if (ok) expect_canon.insert(canonical_string(g));
    }
    CHECK(got_canon == expect_canon);

    // Degree ceiling and Ore floor behave as restrictions of the full list.
    EnumerationFilter cap;
    cap.max_degree = 2;
    std::vector<Graph> sparse = enumerate_graphs(5, cap);
    for (const Graph& g : sparse) CHECK(degree_stats(g).max_degree <= 2);
    EnumerationFilter ore;
    ore.min_sigma2 = 5;
    std::vector<Graph> strong = enumerate_graphs(5, ore);
    std::size_t ore_direct = 0, sparse_direct = 0;
    for (const Graph& g : enumerate_graphs(5)) {
        DegreeStats st = degree_stats(g);
        if (st.sigma2 >= 5) ++ore_direct;
        if (st.max_degree <= 2) ++sparse_direct;
    }
    CHECK(strong.size() == ore_direct);
    CHECK(sparse.size() == sparse_direct);
}

TEST_CASE("theorem names round-trip") {
    for (TheoremId id : {TheoremId::T1, TheoremId::T2, TheoremId::T4, TheoremId::T9,
                         TheoremId::L16, TheoremId::C14, TheoremId::H3Necessity}) {
        std::string name = theorem_name(id);
        CHECK_FALSE(name.empty());
        auto back = parse_theorem(name);
        REQUIRE(back.has_value());
        CHECK(*back == id);
    }
    CHECK_FALSE(parse_theorem("nonsense").has_value());
    CHECK_FALSE(parse_theorem("").has_value());
}

TEST_CASE("minimum-degree statement holds exhaustively at n = 6, k = 2") {
    EnumerationFilter f;
    f.min_degree = 4;
    std::vector<Graph> stream = enumerate_graphs(6, f);
    VerifyReport rep = verify(stream, {TheoremId::T1, 2});
    CHECK(rep.examined == stream.size());
    CHECK(rep.confirmed == stream.size());  // delta >= 4 = 2k: none vacuous
    CHECK(rep.vacuous == 0);
    CHECK(rep.skipped == 0);
    CHECK(rep.pass());
    CHECK(rep.summary().find("PASS") != std::string::npos);
}

TEST_CASE("sharpness trio behaves exactly as advertised under the refined statement") {
    std::vector<Graph> stream{named_family({FamilyKind::Y1}), named_family({FamilyKind::Y2}),
                              named_family({FamilyKind::Gk, 3})};
    VerifyReport rep = verify(stream, {TheoremId::T9, 3});
    CHECK(rep.examined == 3);
    CHECK(rep.exceptional == 2);  // the two k = 3 exceptions
    CHECK(rep.vacuous == 1);      // Gk(3) misses the Ore-degree floor
    CHECK(rep.confirmed == 0);
    CHECK(rep.pass());
}

TEST_CASE("characterization statement handles both directions and its exceptions") {
    std::vector<Graph> stream{named_family({FamilyKind::Wheel, 7}),
                              named_family({FamilyKind::CompleteK, 6}),
                              named_family({FamilyKind::CompleteBipartite, 3, 3})};
    VerifyReport rep = verify(stream, {TheoremId::T2, 2});
    CHECK(rep.examined == 3);
    CHECK(rep.exceptional == 1);  // the wheel
    CHECK(rep.pass());

    // Odd-k join exception at k = 3.
    std::vector<Graph> joins{named_family({FamilyKind::TwoKkJoinKkBar, 3}),
                             named_family({FamilyKind::CompleteK, 9})};
    VerifyReport rep3 = verify(joins, {TheoremId::T2, 3});
    CHECK(rep3.exceptional == 1);
    CHECK(rep3.confirmed == 1);
    CHECK(rep3.pass());
}

TEST_CASE("two-cycle catalogue statement on known members and non-members") {
    std::vector<Graph> stream{
        disjoint_union(named_family({FamilyKind::CompleteK, 5}),
                       named_family({FamilyKind::CompleteK, 2})),
        named_family({FamilyKind::CompleteBipartite, 3, 5}),
        named_family({FamilyKind::Wheel, 6}),
        testutil::petersen(),  // has two disjoint cycles: vacuous
    };
    VerifyReport rep = verify(stream, {TheoremId::L16, 2});
    CHECK(rep.examined == 4);
    CHECK(rep.confirmed == 3);
    CHECK(rep.vacuous == 1);
    CHECK(rep.pass());
}

TEST_CASE("triangle-partition statement distinguishes its unique exception") {
    std::vector<Graph> stream{
        named_family({FamilyKind::CompleteK, 9}),
        named_family({FamilyKind::TwoKkJoinKkBar, 3}),
        disjoint_union(disjoint_union(named_family({FamilyKind::CompleteK, 3}),
                                      named_family({FamilyKind::CompleteK, 3})),
                       named_family({FamilyKind::CompleteK, 3})),
    };
    VerifyReport rep = verify(stream, {TheoremId::C14, 3});
    CHECK(rep.examined == 3);
    CHECK(rep.exceptional == 1);
    CHECK(rep.pass());
    CHECK(rep.confirmed + rep.vacuous == 2);
}

TEST_CASE("independence necessity holds exhaustively at n = 6") {
    std::vector<Graph> stream = enumerate_graphs(6);
    VerifyReport rep = verify(stream, {TheoremId::H3Necessity, 2});
    CHECK(rep.examined == stream.size());
    CHECK(rep.pass());
    CHECK(rep.confirmed + rep.vacuous == rep.examined);

    VerifyReport ore = verify(stream, {TheoremId::T4, 2});
    CHECK(ore.pass());
    CHECK(ore.confirmed > 0);
}

TEST_CASE("sampled mode is a deterministic, order-independent projection") {
    std::vector<Graph> stream = enumerate_graphs(6);
    VerifyOptions opts;
    opts.mode = VerifyMode::Sampled;
    opts.keep_per_1024 = 512;
    VerifyReport a = verify(stream, {TheoremId::T1, 2}, opts);
    CHECK(a.examined + a.sampled_out == stream.size());
    CHECK(a.examined > 0);
    CHECK(a.sampled_out > 0);
    CHECK(a.pass());
    CHECK(a.summary().find("seed=0x") != std::string::npos);

    VerifyReport b = verify(stream, {TheoremId::T1, 2}, opts);
    CHECK(a.examined == b.examined);
    CHECK(a.confirmed == b.confirmed);
    CHECK(a.vacuous == b.vacuous);

    std::vector<Graph> reversed(stream.rbegin(), stream.rend());
    VerifyReport c = verify(reversed, {TheoremId::T1, 2}, opts);
    CHECK(a.examined == c.examined);
    CHECK(a.confirmed == c.confirmed);

    opts.seed = 12345;
    VerifyReport d = verify(stream, {TheoremId::T1, 2}, opts);
    CHECK(d.examined + d.sampled_out == stream.size());
    CHECK(d.pass());
}

TEST_CASE("starved ground truth is skipped, never passed") {
    VerifyOptions opts;
    opts.oracle_budget = 1;
    VerifyReport rep = verify({testutil::petersen()}, {TheoremId::T2, 2}, opts);
    CHECK(rep.examined == 1);
    CHECK(rep.skipped == 1);
    CHECK(rep.confirmed == 0);
    CHECK(rep.pass());  // skipped is not a counterexample, but it is visible
    CHECK(rep.summary().find("skipped=1") != std::string::npos);
}

TEST_CASE("report formatting carries everything needed for replay") {
    VerifyReport rep;
    rep.id = TheoremId::T9;
    rep.k = 3;
    rep.examined = 2;
    rep.confirmed = 1;
    rep.counterexamples.push_back({"Bw", "synthetic failure"});
    CHECK_FALSE(rep.pass());
    std::vector<std::string> lines = rep.machine_lines();
    REQUIRE(lines.size() == 1);
    CHECK(lines[0] == "Bw\tT9\tsynthetic failure");
    std::string s = rep.summary();
    CHECK(s.find("FAIL") != std::string::npos);
    CHECK(s.find("Bw") != std::string::npos);
    CHECK(s.find("T9") != std::string::npos);
}

TEST_CASE("random graph streams are deterministic in their seed") {
    std::vector<Graph> a = random_graphs(8, 5, 512, 99);
    std::vector<Graph> b = random_graphs(8, 5, 512, 99);
    REQUIRE(a.size() == 5);
    REQUIRE(b.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(a[i].n() == 8);
        CHECK(a[i].adjacency_bits() == b[i].adjacency_bits());
    }
    std::vector<Graph> c = random_graphs(8, 5, 512, 100);
    bool any_difference = false;
    for (std::size_t i = 0; i < 5; ++i)
        if (a[i].adjacency_bits() != c[i].adjacency_bits()) any_difference = true;
    CHECK(any_difference);
}
