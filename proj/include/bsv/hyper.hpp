#ifndef BSV_HYPER_HPP
#define BSV_HYPER_HPP

#include <cstdint>
#include <optional>

#include "bsv/construct.hpp"
#include "bsv/graph.hpp"

namespace bsv {

struct Hypergraph {
    int n_vertices = 0;
    std::vector<std::vector<int>> edges;
    std::optional<std::vector<int>> parts;  // part id per vertex, r-partite when present

    int part_count() const;
    // every edge meets every part exactly once
    bool parts_valid() const;
};

// Hypergraph vertex = base edge index, hyperedge e_v = edges incident to v.
struct LineHypergraph {
    Graph base;
    Hypergraph hyper;
};

LineHypergraph line_hypergraph(const Graph& g);  // throws on isolated vertices

// Deleting a hypergraph vertex removes it and every hyperedge containing it.
Hypergraph hypergraph_delete_vertices(const Hypergraph& h, const std::vector<int>& del);

// Exact nu/tau by branch and bound, independent of the MIS engine; intended
// for oracle-scale instances.
int hypergraph_matching_exact(const Hypergraph& h);
int hypergraph_cover_exact(const Hypergraph& h);  // throws beyond ~200 vertices

struct MatchingCover {
    int nu = 0;
    int tau = 0;
};
MatchingCover matching_and_cover(const Hypergraph& h);
// nu via alpha of the base, tau via the edge-cover shortcut |V| - mu.
MatchingCover matching_and_cover(const LineHypergraph& lh);

std::optional<std::vector<int>> hamilton_cycle(const Graph& g);

// Proper 3-edge-coloring (color per index of g.edges()), or definitive
// absence.  Hamiltonian route first, direct backtracking otherwise.
std::optional<std::vector<int>> three_edge_coloring(const Graph& g);

enum class LovaszMode { brute, orbit_reduced };

struct LovaszOptions {
    int jobs = 1;
    std::uint64_t aut_node_budget = 50'000'000;  // orbit mode falls back to brute on excess
    bool stop_on_first_failure = false;
};

struct LovaszReport {
    int alpha = 0;
    std::int64_t pairs_checked = 0;
    std::int64_t pruned = 0;
    struct PairFailure {
        Edge e, f;
        int achieved_alpha;  // exact for solved pairs, certified bound for pruned ones
    };
    std::vector<PairFailure> failures;
    LovaszMode mode = LovaszMode::brute;
    bool fell_back_to_brute = false;

    bool passed() const { return failures.empty(); }
};

// Checks alpha(g - V(e) - V(f)) == alpha(g) for every unordered pair of
// distinct edges (shared endpoints allowed).
LovaszReport verify_lovasz_property(const Graph& g, LovaszMode mode, const LovaszOptions& opt = {});

struct WitnessOptions {
    std::uint64_t solve_budget = 2'000'000;  // candidate subsets examined in the general stage
};

struct WitnessResult {
    enum class Status { found, exhausted, budget_exceeded };
    Status status = Status::exhausted;
    std::vector<Edge> edges;  // 2k base edges when found
    int achieved_drop = 0;

    bool found() const { return status == Status::found; }
};

// Conjecture-4.1 style search: 2k base edges whose endpoint-union deletion
// drops alpha by at least k (k in {1,2}).
WitnessResult weak_conjecture_witness(const Graph& g, int k, const WitnessOptions& opt = {});

// Replays the distance/path/cycle certificates of the case analysis behind
// the avoidance lemma, including a size-43 avoiding set per case.
VerificationReport verify_case_certificates(const LabeledBs& bs);

}  // namespace bsv

#endif
