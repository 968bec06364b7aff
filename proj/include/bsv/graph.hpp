#ifndef BSV_GRAPH_HPP
#define BSV_GRAPH_HPP

#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bsv/bits.hpp"
#include "bsv/report.hpp"

namespace bsv {

using Edge = std::pair<int, int>;

// Simple undirected graph on dense vertex indices 0..n-1, adjacency kept as
// fixed-width bit rows.  Immutable once built; every operation below is a
// pure function of the graph.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n) : n_(n) {
        if (n < 0 || n > kMaxVertices) throw std::invalid_argument("graph order out of range");
        adj_.resize(n);
    }
    static Graph from_edges(int n, std::span<const Edge> edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }
    static Graph from_edges(int n, std::initializer_list<Edge> edges) {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loop");
        if (adj_[u].test(v)) return;
        adj_[u].set(v);
        adj_[v].set(u);
        m_++;
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    int degree(int v) const { return adj_[v].count(); }
    const VertexSet& neighbours(int v) const { return adj_[v]; }

    // Canonical sorted list of unordered pairs {u,v}, u < v.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(m_);
        for (int u = 0; u < n_; u++)
            for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v)) out.push_back({u, v});
        return out;
    }

    std::optional<int> regular_degree() const {
        if (n_ == 0) return std::nullopt;
        int d = degree(0);
        for (int v = 1; v < n_; v++)
            if (degree(v) != d) return std::nullopt;
        return d;
    }
    bool is_cubic() const { return regular_degree() == 3; }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

  private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
};

// BFS level decomposition from one root.  dist[v] == -1 marks a vertex
// unreachable from the root (an infinite distance).
struct LevelDecomposition {
    int root = 0;
    std::vector<int> dist;
    std::vector<std::vector<int>> levels;     // D_0 .. D_ecc, reachable vertices only
    std::vector<VertexSet> level_sets;        // same levels as bit rows

    int eccentricity() const { return static_cast<int>(levels.size()) - 1; }
    bool reachable(int v) const { return dist[v] >= 0; }
};

struct IntersectionArray {
    std::vector<int> b;  // b_0 .. b_{k-1}
    std::vector<int> c;  // c_1 .. c_k
    friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;
};

// Absent optionals mean "infinite" (girth of a forest, diameter of a
// disconnected graph) or "not defined" (degree / array of irregular graphs).
struct DistanceInvariants {
    std::optional<int> regular_degree;
    std::optional<int> girth;
    std::optional<int> diameter;
    std::optional<IntersectionArray> intersection_array;
};

struct InducedSubgraph {
    Graph graph;
    std::vector<int> old_of_new;  // new index -> original index
    std::vector<int> new_of_old;  // original index -> new index, -1 if deleted
};

LevelDecomposition bfs_levels(const Graph& g, int root);
DistanceInvariants distance_invariants(const Graph& g);
InducedSubgraph delete_vertices(const Graph& g, const VertexSet& s);
bool is_connected(const Graph& g);

// All seven level-set properties of the diameter-7 array, checked for every
// root.  Failures carry (root, part, witness).
VerificationReport verify_level_set_properties(const Graph& g);

}  // namespace bsv

#endif
