#ifndef BSV_MIS_HPP
#define BSV_MIS_HPP

#include <cstdint>
#include <optional>

#include "bsv/graph.hpp"

namespace bsv {

struct MisResult {
    int size = 0;
    VertexSet witness;  // independent, |witness| == size
    std::uint64_t nodes_explored = 0;
    std::uint64_t bound_calls = 0;
};

// Exact maximum independent set by branch and bound on bit rows.
MisResult max_independent_set(const Graph& g);

// alpha(g - forbidden): largest independent set disjoint from `forbidden`.
// With prove_at_least = t the search stops as soon as an independent set of
// size >= t is found (the result is then a witness of size >= t, not
// necessarily maximum); without the threshold the result is exact.
MisResult alpha_avoiding(const Graph& g, const VertexSet& forbidden,
                         std::optional<int> prove_at_least = std::nullopt);

// Exhaustive oracle for n <= 24, used to validate the solver.
int brute_force_alpha(const Graph& g);

bool check_independent(const Graph& g, const VertexSet& s);

}  // namespace bsv

#endif
