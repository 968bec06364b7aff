#ifndef BSV_AUTOM_HPP
#define BSV_AUTOM_HPP

#include <array>
#include <cstdint>

#include "bsv/construct.hpp"
#include "bsv/graph.hpp"

namespace bsv {

struct Permutation {
    std::vector<int> to;  // to[v] = image of v

    int size() const { return static_cast<int>(to.size()); }
    int operator()(int v) const { return to[v]; }
    bool is_identity() const {
        for (int v = 0; v < size(); v++)
            if (to[v] != v) return false;
        return true;
    }
    friend bool operator==(const Permutation&, const Permutation&) = default;
};

Permutation identity_permutation(int n);
// (a * b)(x) = a(b(x))
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);
bool is_bijection(const Permutation& p);
std::string cycle_notation(const Permutation& p);

// True iff p preserves adjacency and non-adjacency.  Throws on a
// non-bijective map.
bool is_automorphism(const Graph& g, const Permutation& p);

struct GroupDescription {
    std::vector<Permutation> generators;
    std::uint64_t order = 1;
    // orbit sizes along the stabilizer chain; their product equals order
    std::vector<std::uint64_t> chain_orbit_sizes;
    std::vector<std::vector<int>> vertex_orbits;
    std::vector<std::vector<int>> edge_orbits;  // indices into g.edges()
};

struct AutOptions {
    std::uint64_t node_budget = 50'000'000;
};

struct AutBudgetExceeded : std::runtime_error {
    AutBudgetExceeded() : std::runtime_error("automorphism search exceeded its node budget") {}
};

// Exact automorphism group: individualization backtracking with candidate
// refinement by degree and distance signatures, order via orbit-stabilizer
// along a base of individualized vertices.
GroupDescription automorphism_group(const Graph& g, const AutOptions& opt = {});

// The 136 automorphisms of Prop-A.1 shape: dihedral index maps composed with
// the multiplier maps i -> k*i (k = 1,2,4,8), letters permuted per multiplier.
std::vector<Permutation> h_preserving_group(const LabeledBs& bs);

// Distance 4-tuple of an ordered edge pair plus its canonical form under the
// eight relabelings (swap inside either edge, swap the two edges).
struct PairProfile {
    std::array<int, 4> d;          // d_ux, d_uy, d_vx, d_vy
    std::array<int, 4> canonical;  // lexicographic minimum over relabelings
    friend bool operator==(const PairProfile&, const PairProfile&) = default;
};

PairProfile pair_profile(const Graph& g, Edge e, Edge f);

// Lemma-2.3 check: every distance-equivalence class of ordered edge pairs
// (and of edge-vertex pairs) is a single orbit of the group.
VerificationReport verify_pair_transitivity(const Graph& g, const GroupDescription& group);

// Orbit counts of ordered vertex pairs at each distance d (index d); all 1
// exactly when the graph is distance-transitive under `group`.
std::vector<int> distance_orbit_counts(const Graph& g, const GroupDescription& group);

}  // namespace bsv

#endif
