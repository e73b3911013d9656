#include <cstdint>
#include <vector>

#include "cyclepack/families.hpp"
#include "cyclepack/graph.hpp"
#include "cyclepack/independence.hpp"
#include "cyclepack/verifier.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cyclepack;

namespace {

bool is_independent(const Graph& g, const VertexSet& s) {
    for (int u = s.first(); u >= 0; u = s.next(u))
        for (int v = s.next(u); v >= 0; v = s.next(v))
            if (g.has_edge(u, v)) return false;
    return true;
}

void check_exact(const Graph& g) {
    int truth = testutil::subset_alpha(g);
    IndependenceResult r = independence_number(g);
    REQUIRE(r.status == IndependenceResult::Status::Exact);
    CHECK(r.alpha == truth);
    CHECK(int(r.witness.count()) == truth);
    CHECK(is_independent(g, r.witness));
}

}  // namespace

TEST_CASE("independence number on named graphs") {
    CHECK(independence_number(named_family({FamilyKind::CompleteBipartite, 3, 5})).alpha == 5);
    CHECK(independence_number(named_family({FamilyKind::Cycle, 5})).alpha == 2);
    CHECK(independence_number(testutil::petersen()).alpha == 4);
    CHECK(independence_number(named_family({FamilyKind::CompleteK, 6})).alpha == 1);
    CHECK(independence_number(complement(named_family({FamilyKind::CompleteK, 6}))).alpha == 6);
}

TEST_CASE("independence number matches subset enumeration exhaustively to n = 6") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n)) check_exact(g);
}

TEST_CASE("independence number matches subset enumeration on random graphs") {
    for (int n : {7, 8, 9, 10})
        for (int per1024 : {150, 400, 700, 950})
            for (std::uint64_t s = 0; s < 8; ++s)
                check_exact(testutil::random_graph(n, per1024, 97 * n + 31 * per1024 + s));
}

TEST_CASE("threshold query agrees with the exact alpha at every cut") {
    std::vector<Graph> pool{
        named_family({FamilyKind::CompleteBipartite, 3, 5}),
        testutil::petersen(),
        named_family({FamilyKind::Y1}),
        testutil::random_graph(9, 350, 5),
        testutil::random_graph(9, 800, 6),
    };
    for (const Graph& g : pool) {
        int alpha = testutil::subset_alpha(g);
        for (int t = -1; t <= g.n(); ++t) {
            auto answer = independence_exceeds(g, t);
            REQUIRE(answer.has_value());
            CHECK(answer->exceeds == (alpha > t));
            if (answer->exceeds) {
                CHECK(int(answer->witness.count()) == t + 1);
                CHECK(is_independent(g, answer->witness));
            }
        }
    }
}

TEST_CASE("exhausted budget is reported, never passed off as exact") {
    Graph g = testutil::random_graph(18, 300, 42);
    IndependenceResult r = independence_number(g, 1);
    CHECK(r.status == IndependenceResult::Status::BudgetExceeded);
    CHECK(r.nodes >= 1);
    // Whatever was found so far must still be a genuine independent set.
    CHECK(is_independent(g, r.witness));
    CHECK(int(r.witness.count()) == r.alpha);
    CHECK_FALSE(independence_exceeds(g, g.n() / 2, 1).has_value());
}
