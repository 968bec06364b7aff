#ifndef BSV_APPENDIX_HPP
#define BSV_APPENDIX_HPP

#include <cstdint>
#include <span>

#include "bsv/construct.hpp"
#include "bsv/graph.hpp"

namespace bsv {

struct CirculantSpec {
    int n = 17;
    std::vector<int> diffs{1, 4};
};

// Vertex i ~ j iff the circular difference |i-j| mod n lies in diffs.
Graph circulant_graph(const CirculantSpec& spec);

// Subsets of [17] as bitmasks, bit i-1 for element i.
using IndexSet = std::uint32_t;

std::vector<int> index_set_elements(IndexSet s);           // sorted 1..17
IndexSet index_set_of(std::span<const int> elems);
IndexSet index_set_of(std::initializer_list<int> elems);

// i -> mult*i + shift on 1..17, residue 0 written as 17.
struct IndexSymmetry {
    int mult = 1;
    int shift = 0;
    int apply(int i) const {
        int j = (mult * i + shift) % 17;
        if (j < 0) j += 17;
        return j == 0 ? 17 : j;
    }
    IndexSet apply(IndexSet s) const;
};

// Dihedral group times the multiplier maps phi_k for the given k values:
// 34 * |ks| elements (multipliers +-k all distinct mod 17).
std::vector<IndexSymmetry> index_symmetries(std::span<const int> ks);
std::vector<IndexSymmetry> index_symmetries(std::initializer_list<int> ks);

struct IndexSetClass {
    IndexSet representative;        // lexicographic minimum member
    std::vector<IndexSet> members;  // independent sets only, sorted
};

// Equivalence classes of the independent sets of C(17,{1,4}) of the given
// size, under the dihedral group combined with the multipliers in `ks`.
std::vector<IndexSetClass> enumerate_classes(int size, std::span<const int> ks);
std::vector<IndexSetClass> enumerate_classes(int size, std::initializer_list<int> ks);

// Appendix claims 1-5 by direct finite enumeration, including the table
// reproductions.
VerificationReport verify_claims(const LabeledBs& bs);

// Every ordered pair of table-1 J_e candidates misses no symmetry: the first
// set meets sigma(phi_2(second)) for all 136 sigma.
VerificationReport final_disjointness_check();

// The table-1 J_e candidate lists (10-set variants of the j_ab = 6 row
// included); `strict` filters the removed-element variants that would allow
// re-adding a vertex elsewhere.
std::vector<IndexSet> table1_je_candidates(bool strict);

}  // namespace bsv

#endif
