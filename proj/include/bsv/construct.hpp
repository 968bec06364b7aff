#ifndef BSV_CONSTRUCT_HPP
#define BSV_CONSTRUCT_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "bsv/graph.hpp"

namespace bsv {

// Order-n expansion of the H-graph (double star with centres e,f; leaves a,b
// on e and c,d on f): n disjoint copies whose leaf classes are joined into
// four cycles with the given step offsets (o_a, o_b, o_c, o_d).
struct HExpansionSpec {
    int n = 17;
    std::array<int, 4> offsets{1, 4, 2, 8};

    void validate() const;  // throws std::invalid_argument
    // gcd(offset, n) cycles per letter class; single cycle iff coprime.
    std::array<int, 4> cycle_counts() const;
};

Graph build_h_expansion(const HExpansionSpec& spec);

inline constexpr int kLetterA = 0, kLetterB = 1, kLetterC = 2, kLetterD = 3, kLetterE = 4,
                     kLetterF = 5;

// The Biggs-Smith instance together with the bijection between vertex
// indices and labels "1a".."17f".  Vertex index = 6*(i-1) + letter code.
struct LabeledBs {
    Graph graph;

    static int index_of(int hset, int letter) { return 6 * (hset - 1) + letter; }
    static int hset_of(int v) { return v / 6 + 1; }          // 1..17
    static int letter_of(int v) { return v % 6; }            // 0..5
    static char part_of(int v) { return static_cast<char>('A' + letter_of(v)); }

    static std::string label_of(int v) {
        return std::to_string(hset_of(v)) + static_cast<char>('a' + letter_of(v));
    }
    // "12e" -> index; rejects anything outside 1..17 x a..f.
    static std::optional<int> vertex_by_label(std::string_view label);
};

LabeledBs build_biggs_smith();

// Lemma-style geodesic suites specific to the Biggs-Smith labeling.
VerificationReport verify_acycle_geodesics(const LabeledBs& bs);
VerificationReport verify_displaced_paths(const LabeledBs& bs);

}  // namespace bsv

#endif
