#include <doctest.h>

#include <set>

#include "bsv/appendix.hpp"
#include "bsv/autom.hpp"
#include "bsv/mis.hpp"

using namespace bsv;

TEST_CASE("circulant graphs") {
    Graph c = circulant_graph({17, {1, 4}});
    CHECK(c.vertex_count() == 17);
    CHECK(c.edge_count() == 34);
    CHECK(c.regular_degree() == 4);
    CHECK(max_independent_set(c).size == 6);

    Graph c5 = circulant_graph({5, {1}});
    CHECK(c5.edge_count() == 5);
    CHECK(max_independent_set(c5).size == 2);

    CHECK_THROWS_AS(circulant_graph({17, {0}}), std::invalid_argument);
    CHECK_THROWS_AS(circulant_graph({17, {9}}), std::invalid_argument);
}

TEST_CASE("index set plumbing") {
    IndexSet s = index_set_of({1, 3, 6, 8, 11, 13});
    CHECK(index_set_elements(s) == std::vector<int>{1, 3, 6, 8, 11, 13});
    IndexSymmetry refl{-1, 0};
    CHECK(index_set_elements(refl.apply(index_set_of({1, 2}))) == std::vector<int>{15, 16});
    IndexSymmetry phi4{4, 0};
    CHECK(phi4.apply(17) == 17);  // residue 0 is written as 17
    CHECK(phi4.apply(1) == 4);

    CHECK(index_symmetries({1, 4}).size() == 68);
    CHECK(index_symmetries({1, 2, 4, 8}).size() == 136);
}

TEST_CASE("index symmetries are the h-preserving group's action on H-set indices") {
    auto bs = build_biggs_smith();
    auto hp = h_preserving_group(bs);
    std::set<std::array<int, 17>> from_group;
    for (const auto& p : hp) {
        std::array<int, 17> m{};
        for (int i = 1; i <= 17; i++)
            m[i - 1] = LabeledBs::hset_of(p(LabeledBs::index_of(i, kLetterA)));
        from_group.insert(m);
    }
    std::set<std::array<int, 17>> from_appendix;
    for (const auto& sym : index_symmetries({1, 2, 4, 8})) {
        std::array<int, 17> m{};
        for (int i = 1; i <= 17; i++) m[i - 1] = sym.apply(i);
        from_appendix.insert(m);
    }
    CHECK(from_group.size() == 136);
    CHECK(from_group == from_appendix);
}

TEST_CASE("phi_4 preserves the circulant edge set") {
    Graph c = circulant_graph({17, {1, 4}});
    IndexSymmetry phi4{4, 0};
    for (auto [u, v] : c.edges())
        CHECK(c.adjacent(phi4.apply(u + 1) - 1, phi4.apply(v + 1) - 1));
}

TEST_CASE("equivalence classes match the tables") {
    auto six = enumerate_classes(6, {1, 4});
    REQUIRE(six.size() == 1);
    CHECK(six[0].representative == index_set_of({1, 3, 6, 8, 11, 13}));

    // under dihedral symmetries alone the two named six-element sets are
    // distinct classes; the multiplier map merges them
    auto six_dihedral = enumerate_classes(6, {1});
    REQUIRE(six_dihedral.size() == 2);
    CHECK(six_dihedral[0].representative == index_set_of({1, 3, 6, 8, 11, 13}));
    CHECK(six_dihedral[1].representative == index_set_of({1, 3, 6, 9, 12, 15}));

    auto five = enumerate_classes(5, {1, 4});
    REQUIRE(five.size() == 4);
    std::set<IndexSet> reps5;
    for (const auto& c : five) reps5.insert(c.representative);
    CHECK(reps5 == std::set<IndexSet>{index_set_of({1, 3, 6, 8, 11}),
                                      index_set_of({1, 3, 6, 9, 11}),
                                      index_set_of({1, 3, 6, 9, 12}),
                                      index_set_of({1, 3, 6, 8, 13})});

    auto four = enumerate_classes(4, {1, 4});
    REQUIRE(four.size() == 8);
    // table row {1,3,8,11} names a member of the class whose lexicographic
    // minimum is {1,3,6,12}
    for (IndexSet want :
         {index_set_of({1, 3, 6, 8}), index_set_of({1, 3, 8, 10}), index_set_of({1, 3, 9, 11}),
          index_set_of({1, 3, 6, 9}), index_set_of({1, 3, 8, 11}), index_set_of({1, 3, 8, 13}),
          index_set_of({1, 3, 6, 13}), index_set_of({1, 3, 6, 15})}) {
        int owners = 0;
        for (const auto& c : four)
            for (IndexSet m : c.members)
                if (m == want) owners++;
        CHECK(owners == 1);
    }
}

TEST_CASE("class structure invariants") {
    for (int size : {4, 5, 6}) {
        auto classes = enumerate_classes(size, {1, 4});
        // union of members = every independent set of that size, disjointly
        std::set<IndexSet> all;
        long long total = 0;
        for (const auto& c : classes) {
            total += static_cast<long long>(c.members.size());
            for (IndexSet m : c.members) {
                all.insert(m);
                CHECK(static_cast<int>(std::popcount(m)) == size);
            }
            // representative is a member and the lexicographic minimum
            CHECK(std::count(c.members.begin(), c.members.end(), c.representative) == 1);
        }
        CHECK(static_cast<long long>(all.size()) == total);
        // closure under the group: the image of any member stays in its class
        auto group = index_symmetries({1, 4});
        for (const auto& c : classes)
            for (const auto& sym : group) {
                IndexSet img = sym.apply(c.representative);
                bool in_family = std::count(c.members.begin(), c.members.end(), img) > 0;
                CHECK(in_family);  // multipliers 1 and 4 preserve the circulant
            }
    }
}

TEST_CASE("appendix claims") {
    auto bs = build_biggs_smith();
    auto rep = verify_claims(bs);
    for (const auto& f : rep.failures) MESSAGE(f.check, ": ", f.witness);
    CHECK(rep.passed());
    CHECK(rep.counters.at("claim1_jb8_configs") == 17);
    CHECK(rep.counters.at("claim3_j0_23_configs") == 68);
    CHECK(rep.counters.at("claim3_j0_22_configs") == 680);
    CHECK(rep.counters.at("claim5_extended_configs") == 11152);
    // both printed-table divergences are recorded as notes
    CHECK(rep.notes.size() == 2);
}

TEST_CASE("final disjointness check") {
    auto rep = final_disjointness_check();
    CHECK(rep.passed());
    CHECK(rep.counters.at("candidates") == 33);
    CHECK(rep.counters.at("combinations") == 33 * 33 * 68);
    CHECK(rep.counters.at("strict_candidates") == 33);
    CHECK(rep.counters.at("strict_combinations") == 33 * 33 * 68);
    // the off-side sweep is recorded and genuinely contains disjoint images
    CHECK(rep.counters.at("offside_combinations") == 33 * 33 * 68);
    CHECK(rep.counters.at("offside_disjoint") > 0);
}

TEST_CASE("table-1 candidate list") {
    auto cands = table1_je_candidates(false);
    CHECK(cands.size() == 33);  // 23 printed rows plus the ten 6.1 variants
    for (IndexSet c : cands) {
        int sz = std::popcount(c);
        CHECK(sz >= 8);
        CHECK(sz <= 9);
    }
    // strict filtering changes nothing here: every removal stays left-maximal
    CHECK(table1_je_candidates(true) == cands);
}
