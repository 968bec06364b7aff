#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "bsv/autom.hpp"
#include "support/graphs.hpp"

using namespace bsv;
namespace ts = bsv::testsupport;

namespace {
int vx(const char* label) { return *LabeledBs::vertex_by_label(label); }

// Independent oracle: count automorphisms of a small graph over all of S_n.
long long count_automorphisms_brute(const Graph& g) {
    std::vector<int> perm(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); i++) perm[i] = i;
    long long count = 0;
    auto edges = g.edges();
    do {
        bool ok = true;
        for (auto [u, v] : edges)
            if (!g.adjacent(perm[u], perm[v])) {
                ok = false;
                break;
            }
        if (ok) count++;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}
}  // namespace

TEST_CASE("permutation algebra") {
    Permutation p{{1, 2, 0}};
    Permutation q{{0, 2, 1}};
    CHECK(compose(p, inverse(p)).is_identity());
    CHECK(compose(inverse(p), p).is_identity());
    CHECK(compose(p, q).to == std::vector<int>{1, 0, 2});
    CHECK(identity_permutation(3).is_identity());
    CHECK(cycle_notation(p) == "(0 1 2)");
    CHECK(cycle_notation(identity_permutation(3)) == "()");
    CHECK(!is_bijection(Permutation{{0, 0, 1}}));
}

TEST_CASE("is_automorphism") {
    auto bs = build_biggs_smith();
    CHECK(is_automorphism(bs.graph, identity_permutation(102)));

    // rotate every H-set index by one, letters fixed
    Permutation rot;
    rot.to.resize(102);
    for (int v = 0; v < 102; v++)
        rot.to[v] = LabeledBs::index_of(LabeledBs::hset_of(v) % 17 + 1, LabeledBs::letter_of(v));
    CHECK(is_automorphism(bs.graph, rot));

    // swapping just 1a and 2a breaks adjacency
    Permutation swp = identity_permutation(102);
    std::swap(swp.to[vx("1a")], swp.to[vx("2a")]);
    CHECK(!is_automorphism(bs.graph, swp));

    Permutation bad{std::vector<int>(102, 0)};
    CHECK_THROWS_AS(is_automorphism(bs.graph, bad), std::invalid_argument);
}

TEST_CASE("automorphism groups of small graphs") {
    auto c5 = automorphism_group(ts::cycle(5));
    CHECK(c5.order == 10);

    auto pet = automorphism_group(ts::petersen());
    CHECK(pet.order == 120);
    CHECK(count_automorphisms_brute(ts::petersen()) == 120);

    auto k4 = automorphism_group(ts::complete(4));
    CHECK(k4.order == 24);

    auto p3 = automorphism_group(ts::path(3));
    CHECK(p3.order == 2);

    auto single = automorphism_group(Graph(1));
    CHECK(single.order == 1);
}

TEST_CASE("random small graphs match the S_n oracle") {
    std::mt19937 rng(31);
    for (int t = 0; t < 12; t++) {
        Graph g = ts::random_graph(6 + static_cast<int>(rng() % 2), 0.4, rng);
        auto gd = automorphism_group(g);
        CHECK(static_cast<long long>(gd.order) == count_automorphisms_brute(g));
        for (const auto& gen : gd.generators) CHECK(is_automorphism(g, gen));
    }
}

TEST_CASE("biggs-smith group: order, orbits, chain") {
    auto bs = build_biggs_smith();
    auto gd = automorphism_group(bs.graph);
    CHECK(gd.order == 2448);  // |PSL(2,17)| = 17 * 288 / 2
    CHECK(gd.vertex_orbits.size() == 1);
    CHECK(gd.vertex_orbits[0].size() == 102);
    CHECK(gd.edge_orbits.size() == 1);
    CHECK(gd.edge_orbits[0].size() == 153);
    std::uint64_t prod = 1;
    for (auto s : gd.chain_orbit_sizes) prod *= s;
    CHECK(prod == gd.order);
    for (const auto& gen : gd.generators) CHECK(is_automorphism(bs.graph, gen));
}

TEST_CASE("group order is invariant under relabeling") {
    std::mt19937 rng(77);
    Graph g = ts::petersen();
    std::vector<int> perm(10);
    for (int i = 0; i < 10; i++) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h(10);
    for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
    CHECK(automorphism_group(h).order == 120);
}

TEST_CASE("h-preserving group") {
    auto bs = build_biggs_smith();
    auto hp = h_preserving_group(bs);
    REQUIRE(hp.size() == 136);
    std::set<std::vector<int>> distinct;
    for (const auto& p : hp) {
        CHECK(is_automorphism(bs.graph, p));
        distinct.insert(p.to);
    }
    CHECK(distinct.size() == 136);

    // parts map to parts; the pure multiplier maps act as stated
    auto part_image = [&](const Permutation& p, char part) {
        char got = 0;
        for (int v = 0; v < 102; v++) {
            if (LabeledBs::part_of(v) != part) continue;
            char q = LabeledBs::part_of(p(v));
            if (got == 0) got = q;
            CHECK(got == q);
        }
        return got;
    };
    auto find_phi = [&](int k) {
        for (const auto& p : hp) {
            bool match = true;
            for (int i = 1; i <= 17 && match; i++) {
                int img = (k * i) % 17;
                if (img == 0) img = 17;
                if (LabeledBs::hset_of(p(LabeledBs::index_of(i, kLetterA))) != img) match = false;
            }
            if (match) return p;
        }
        throw std::logic_error("phi_k not found");
    };
    auto phi4 = find_phi(4);
    CHECK(part_image(phi4, 'A') == 'B');
    CHECK(part_image(phi4, 'C') == 'D');
    CHECK(part_image(phi4, 'E') == 'E');
    auto phi2 = find_phi(2);
    CHECK(part_image(phi2, 'E') == 'F');
    CHECK(part_image(phi2, 'A') == 'C');
    auto phi8 = find_phi(8);
    CHECK(part_image(phi8, 'E') == 'F');
    CHECK(part_image(phi8, 'A') == 'D');
}

TEST_CASE("pair profiles") {
    auto bs = build_biggs_smith();
    auto P = [&](const char* a, const char* b, const char* c, const char* d) {
        return pair_profile(bs.graph, {vx(a), vx(b)}, {vx(c), vx(d)});
    };
    CHECK(P("1a", "17a", "13a", "12a").d == std::array<int, 4>{5, 6, 4, 5});
    CHECK(P("2b", "2e", "8c", "10c").d == std::array<int, 4>{5, 5, 5, 5});

    // same edge against itself, up to relabeling
    auto self = P("1a", "2a", "1a", "2a");
    CHECK(self.canonical == std::array<int, 4>{0, 1, 1, 0});

    // canonical form invariant under the 8 relabelings
    auto a = P("1a", "17a", "13a", "12a");
    CHECK(P("17a", "1a", "13a", "12a").canonical == a.canonical);
    CHECK(P("1a", "17a", "12a", "13a").canonical == a.canonical);
    CHECK(P("13a", "12a", "1a", "17a").canonical == a.canonical);

    CHECK_THROWS_AS(P("1a", "3a", "1a", "2a"), std::invalid_argument);
}

TEST_CASE("pair profiles are automorphism invariant") {
    auto bs = build_biggs_smith();
    auto hp = h_preserving_group(bs);
    auto edges = bs.graph.edges();
    std::mt19937 rng(4);
    for (int t = 0; t < 20; t++) {
        Edge e = edges[rng() % edges.size()];
        Edge f = edges[rng() % edges.size()];
        const Permutation& p = hp[rng() % hp.size()];
        auto before = pair_profile(bs.graph, e, f);
        auto after = pair_profile(bs.graph, {p(e.first), p(e.second)}, {p(f.first), p(f.second)});
        CHECK(after.d == before.d);
        CHECK(after.canonical == before.canonical);
    }
}

TEST_CASE("pair transitivity on the Biggs-Smith graph") {
    auto bs = build_biggs_smith();
    auto gd = automorphism_group(bs.graph);
    auto rep = verify_pair_transitivity(bs.graph, gd);
    CHECK(rep.passed());
    CHECK(rep.counters.at("edge-pair_classes") == rep.counters.at("edge-pair_orbits"));
    CHECK(rep.counters.at("unordered_pair_classes") == rep.counters.at("unordered_pair_orbits"));
}

TEST_CASE("pair transitivity on C6 and distance orbits") {
    Graph c6 = ts::cycle(6);
    auto gd = automorphism_group(c6);
    CHECK(gd.order == 12);
    auto rep = verify_pair_transitivity(c6, gd);
    CHECK(rep.passed());

    auto bs = build_biggs_smith();
    auto counts = distance_orbit_counts(bs.graph, automorphism_group(bs.graph));
    REQUIRE(counts.size() == 8);
    for (int d = 0; d <= 7; d++) CHECK(counts[d] == 1);
}
