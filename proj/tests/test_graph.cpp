#include <doctest.h>

#include <random>

#include "bsv/construct.hpp"
#include "bsv/graph.hpp"
#include "support/graphs.hpp"

using namespace bsv;
namespace ts = bsv::testsupport;

namespace {
// level sizes from the array recurrence n_{i+1} = n_i * b_i / c_{i+1}
const std::vector<int> kBsLevelSizes{1, 3, 6, 12, 24, 24, 24, 8};
}

TEST_CASE("bfs levels on the Biggs-Smith graph") {
    auto bs = build_biggs_smith();
    for (int root = 0; root < 102; root++) {
        auto ld = bfs_levels(bs.graph, root);
        REQUIRE(ld.eccentricity() == 7);
        for (int i = 0; i <= 7; i++) CHECK(static_cast<int>(ld.levels[i].size()) == kBsLevelSizes[i]);
    }
    // dist(4c, 8c) = 2
    auto ld = bfs_levels(bs.graph, *LabeledBs::vertex_by_label("4c"));
    CHECK(ld.dist[*LabeledBs::vertex_by_label("8c")] == 2);
}

TEST_CASE("bfs levels on a path") {
    auto ld = bfs_levels(ts::path(3), 0);
    CHECK(ld.levels.size() == 3);
    for (auto& lvl : ld.levels) CHECK(lvl.size() == 1);
}

TEST_CASE("bfs levels partition the reachable set and edges stay close") {
    std::mt19937 rng(21);
    for (int t = 0; t < 30; t++) {
        Graph g = ts::random_graph(2 + static_cast<int>(rng() % 40), 0.08, rng);
        int root = static_cast<int>(rng() % g.vertex_count());
        auto ld = bfs_levels(g, root);
        int reach = 0;
        for (int v = 0; v < g.vertex_count(); v++) reach += ld.reachable(v) ? 1 : 0;
        int in_levels = 0;
        for (auto& lvl : ld.levels) in_levels += static_cast<int>(lvl.size());
        CHECK(in_levels == reach);
        for (auto [u, v] : g.edges())
            if (ld.reachable(u) && ld.reachable(v)) CHECK(std::abs(ld.dist[u] - ld.dist[v]) <= 1);
    }
}

TEST_CASE("distance invariants of named graphs") {
    auto inv = distance_invariants(build_biggs_smith().graph);
    CHECK(inv.regular_degree == 3);
    CHECK(inv.girth == 9);
    CHECK(inv.diameter == 7);
    REQUIRE(inv.intersection_array.has_value());
    CHECK(inv.intersection_array->b == std::vector<int>{3, 2, 2, 2, 1, 1, 1});
    CHECK(inv.intersection_array->c == std::vector<int>{1, 1, 1, 1, 1, 1, 3});

    auto pet = distance_invariants(ts::petersen());
    CHECK(pet.regular_degree == 3);
    CHECK(pet.girth == 5);
    CHECK(pet.diameter == 2);
    REQUIRE(pet.intersection_array.has_value());
    CHECK(pet.intersection_array->b == std::vector<int>{3, 2});
    CHECK(pet.intersection_array->c == std::vector<int>{1, 1});

    auto c6 = distance_invariants(ts::cycle(6));
    CHECK(c6.regular_degree == 2);
    CHECK(c6.girth == 6);
    CHECK(c6.diameter == 3);
    REQUIRE(c6.intersection_array.has_value());
    CHECK(c6.intersection_array->b == std::vector<int>{2, 1, 1});
    CHECK(c6.intersection_array->c == std::vector<int>{1, 1, 2});
}

TEST_CASE("distance invariants edge cases") {
    // disconnected: diameter and array absent, girth still finite
    Graph g(7);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(3, 4);
    auto inv = distance_invariants(g);
    CHECK(!inv.diameter.has_value());
    CHECK(!inv.intersection_array.has_value());
    CHECK(inv.girth == 3);
    CHECK(!inv.regular_degree.has_value());

    // forest: no girth
    auto tree = distance_invariants(ts::path(5));
    CHECK(!tree.girth.has_value());
    CHECK(tree.diameter == 4);

    // a non-distance-regular connected graph: array absent
    Graph p4 = ts::path(4);
    CHECK(!distance_invariants(p4).intersection_array.has_value());
}

TEST_CASE("distance invariants are isomorphism-invariant") {
    std::mt19937 rng(5);
    Graph g = ts::petersen();
    std::vector<int> perm(10);
    for (int i = 0; i < 10; i++) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h(10);
    for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
    auto a = distance_invariants(g);
    auto b = distance_invariants(h);
    CHECK(a.girth == b.girth);
    CHECK(a.diameter == b.diameter);
    CHECK(a.intersection_array == b.intersection_array);
}

TEST_CASE("delete_vertices") {
    auto bs = build_biggs_smith();
    VertexSet s;
    for (const char* l : {"11a", "12a", "13a"}) s.set(*LabeledBs::vertex_by_label(l));
    auto sub = delete_vertices(bs.graph, s);
    CHECK(sub.graph.vertex_count() == 99);

    auto same = delete_vertices(bs.graph, {});
    CHECK(same.graph == bs.graph);

    Graph k4 = ts::complete(4);
    auto k2 = delete_vertices(k4, VertexSet::of({0, 1}));
    CHECK(k2.graph.vertex_count() == 2);
    CHECK(k2.graph.edge_count() == 1);

    // remap consistency
    for (int nu = 0; nu < sub.graph.vertex_count(); nu++)
        CHECK(sub.new_of_old[sub.old_of_new[nu]] == nu);
}

TEST_CASE("graph construction guards") {
    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
    CHECK_THROWS_AS(Graph(513), std::invalid_argument);
    CHECK_THROWS_AS(bfs_levels(g, 3), std::invalid_argument);
    g.add_edge(0, 1);
    g.add_edge(0, 1);  // duplicate edges collapse
    CHECK(g.edge_count() == 1);
}

TEST_CASE("level-set properties hold on the Biggs-Smith graph") {
    auto rep = verify_level_set_properties(build_biggs_smith().graph);
    CHECK(rep.passed());
    CHECK(rep.counters.at("nine_cycles") > 0);
}

TEST_CASE("level-set properties fail on a control graph") {
    // C12 has two-vertex levels at distance 4..5 with no intra-level edge
    auto rep = verify_level_set_properties(ts::cycle(12));
    CHECK(!rep.passed());
    bool part4 = false;
    for (const auto& f : rep.failures) part4 |= f.check == "part4";
    CHECK(part4);
}
