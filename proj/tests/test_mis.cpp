#include <doctest.h>

#include <random>

#include "bsv/construct.hpp"
#include "bsv/mis.hpp"
#include "support/graphs.hpp"

using namespace bsv;
namespace ts = bsv::testsupport;

TEST_CASE("brute-force oracle on tiny graphs") {
    CHECK(brute_force_alpha(ts::cycle(5)) == 2);
    CHECK(brute_force_alpha(ts::petersen()) == 4);
    CHECK(brute_force_alpha(ts::complete(4)) == 1);
    CHECK(brute_force_alpha(Graph(7)) == 7);
    CHECK_THROWS_AS(brute_force_alpha(Graph(25)), std::invalid_argument);
}

TEST_CASE("solver equals the oracle on named graphs") {
    CHECK(max_independent_set(ts::cycle(5)).size == 2);
    CHECK(max_independent_set(ts::petersen()).size == 4);
    CHECK(max_independent_set(ts::complete(4)).size == 1);
    CHECK(max_independent_set(ts::k33()).size == 3);
    CHECK(max_independent_set(ts::cube_q3()).size == 4);
    CHECK(max_independent_set(Graph(7)).size == 7);
    CHECK(max_independent_set(Graph(0)).size == 0);
}

TEST_CASE("solver equals the oracle on a random corpus") {
    std::mt19937 rng(99);
    for (int t = 0; t < 60; t++) {
        int n = 4 + 2 * static_cast<int>(rng() % 9);  // 4..20
        Graph g = ts::random_cubic(n, rng);
        auto r = max_independent_set(g);
        CHECK(r.size == brute_force_alpha(g));
        CHECK(check_independent(g, r.witness));
        CHECK(r.witness.count() == r.size);
    }
    for (int t = 0; t < 40; t++) {
        int n = 2 + static_cast<int>(rng() % 17);
        Graph g = ts::random_graph(n, 0.25, rng);
        CHECK(max_independent_set(g).size == brute_force_alpha(g));
    }
}

TEST_CASE("alpha of the Biggs-Smith graph is 43") {
    auto bs = build_biggs_smith();
    auto r = max_independent_set(bs.graph);
    CHECK(r.size == 43);
    CHECK(check_independent(bs.graph, r.witness));
    CHECK(r.witness.count() == 43);
}

TEST_CASE("alpha_avoiding on the case-analysis pairs") {
    auto bs = build_biggs_smith();
    auto forb = [&](std::initializer_list<const char*> labels) {
        VertexSet s;
        for (const char* l : labels) s.set(*LabeledBs::vertex_by_label(l));
        return s;
    };
    auto a1 = alpha_avoiding(bs.graph, forb({"11a", "12a", "13a"}));
    CHECK(a1.size == 43);
    auto a2 = alpha_avoiding(bs.graph, forb({"1a", "17a", "13a", "12a"}));
    CHECK(a2.size == 43);
    CHECK(!a2.witness.intersects(forb({"1a", "17a", "13a", "12a"})));

    auto all = VertexSet::full(bs.graph.vertex_count());
    CHECK(alpha_avoiding(bs.graph, all).size == 0);
}

TEST_CASE("alpha_avoiding monotonicity and witness validity") {
    std::mt19937 rng(123);
    for (int t = 0; t < 25; t++) {
        Graph g = ts::random_cubic(12 + 2 * static_cast<int>(rng() % 5), rng);
        VertexSet f1, f2;
        for (int v = 0; v < g.vertex_count(); v++) {
            if (rng() % 4 == 0) f1.set(v);
            if (rng() % 3 == 0) f2.set(v);
        }
        f2 |= f1;  // f1 subset of f2
        auto r1 = alpha_avoiding(g, f1);
        auto r2 = alpha_avoiding(g, f2);
        CHECK(r1.size >= r2.size);
        CHECK(r1.size >= alpha_avoiding(g, f2).size);
        CHECK(!r1.witness.intersects(f1));
        CHECK(check_independent(g, r1.witness));
        // deleting k vertices drops alpha by at most k
        int alpha = max_independent_set(g).size;
        CHECK(r1.size >= alpha - f1.count());
    }
}

TEST_CASE("solver is deterministic") {
    std::mt19937 rng(7);
    Graph g = ts::random_cubic(20, rng);
    auto a = max_independent_set(g);
    auto b = max_independent_set(g);
    CHECK(a.size == b.size);
    CHECK(a.witness == b.witness);
    CHECK(a.nodes_explored == b.nodes_explored);
}

TEST_CASE("threshold mode proves a target early") {
    auto bs = build_biggs_smith();
    auto r = alpha_avoiding(bs.graph, {}, 43);
    CHECK(r.size >= 43);
    CHECK(check_independent(bs.graph, r.witness));
    // unreachable targets still give the exact value
    auto exact = alpha_avoiding(bs.graph, {}, 60);
    CHECK(exact.size == 43);
}

TEST_CASE("check_independent basics") {
    auto bs = build_biggs_smith();
    int a1 = *LabeledBs::vertex_by_label("1a");
    int a2 = *LabeledBs::vertex_by_label("2a");
    int a3 = *LabeledBs::vertex_by_label("3a");
    CHECK(check_independent(bs.graph, VertexSet::of({a1, a3})));
    CHECK(!check_independent(bs.graph, VertexSet::of({a1, a2})));
    CHECK(check_independent(bs.graph, {}));
}
