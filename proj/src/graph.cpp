#include "bsv/graph.hpp"

#include <algorithm>
#include <string>

namespace bsv {

LevelDecomposition bfs_levels(const Graph& g, int root) {
    const int n = g.vertex_count();
    if (root < 0 || root >= n) throw std::invalid_argument("root out of range");

    LevelDecomposition ld;
    ld.root = root;
    ld.dist.assign(n, -1);
    ld.dist[root] = 0;

    std::vector<int> queue{root};
    for (std::size_t head = 0; head < queue.size(); head++) {
        int u = queue[head];
        const VertexSet& nb = g.neighbours(u);
        for (int v = nb.first(); v >= 0; v = nb.next(v)) {
            if (ld.dist[v] < 0) {
                ld.dist[v] = ld.dist[u] + 1;
                queue.push_back(v);
            }
        }
    }

    int ecc = 0;
    for (int v : queue) ecc = std::max(ecc, ld.dist[v]);
    ld.levels.assign(ecc + 1, {});
    ld.level_sets.assign(ecc + 1, {});
    for (int v = 0; v < n; v++) {
        if (ld.dist[v] >= 0) {
            ld.levels[ld.dist[v]].push_back(v);
            ld.level_sets[ld.dist[v]].set(v);
        }
    }
    return ld;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    auto ld = bfs_levels(g, 0);
    for (int v = 0; v < g.vertex_count(); v++)
        if (!ld.reachable(v)) return false;
    return true;
}

namespace {

// Shortest cycle through `root`, or -1 if none.  BFS with parent-edge
// exclusion: any rediscovered vertex closes a cycle of length
// dist[x] + dist[y] + 1; minimized over all roots this is the exact girth.
int shortest_cycle_through(const Graph& g, int root, std::vector<int>& dist,
                           std::vector<int>& parent) {
    dist.assign(g.vertex_count(), -1);
    parent.assign(g.vertex_count(), -1);
    dist[root] = 0;
    int best = -1;
    std::vector<int> queue{root};
    for (std::size_t head = 0; head < queue.size(); head++) {
        int u = queue[head];
        if (best >= 0 && 2 * dist[u] >= best) break;
        const VertexSet& nb = g.neighbours(u);
        for (int v = nb.first(); v >= 0; v = nb.next(v)) {
            if (v == parent[u]) continue;
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                parent[v] = u;
                queue.push_back(v);
            } else {
                int len = dist[u] + dist[v] + 1;
                if (best < 0 || len < best) best = len;
            }
        }
    }
    return best;
}

}  // namespace

DistanceInvariants distance_invariants(const Graph& g) {
    const int n = g.vertex_count();
    DistanceInvariants inv;
    inv.regular_degree = g.regular_degree();
    if (n == 0) return inv;

    std::vector<int> scratch_dist, scratch_parent;
    int girth = -1;
    int diameter = 0;
    bool connected = true;

    // b/c counts from root 0 form the candidate array; every other root and
    // vertex must agree or the array is absent.
    std::optional<IntersectionArray> array;
    bool array_ok = inv.regular_degree.has_value();
    int k0 = -1;

    for (int root = 0; root < n; root++) {
        auto ld = bfs_levels(g, root);
        for (int v = 0; v < n; v++)
            if (!ld.reachable(v)) connected = false;
        int ecc = ld.eccentricity();
        diameter = std::max(diameter, ecc);

        int cyc = shortest_cycle_through(g, root, scratch_dist, scratch_parent);
        if (cyc >= 0 && (girth < 0 || cyc < girth)) girth = cyc;

        if (!array_ok || !connected) {
            array_ok = false;
            continue;
        }
        if (root == 0) {
            k0 = ecc;
            array = IntersectionArray{std::vector<int>(k0, -1), std::vector<int>(k0, -1)};
        } else if (ecc != k0) {
            array_ok = false;
            continue;
        }
        for (int v = 0; v < n && array_ok; v++) {
            int i = ld.dist[v];
            int up = 0, down = 0;
            const VertexSet& nb = g.neighbours(v);
            for (int w = nb.first(); w >= 0; w = nb.next(w)) {
                if (ld.dist[w] == i + 1) up++;
                if (ld.dist[w] == i - 1) down++;
            }
            if (i < k0) {
                int& b = array->b[i];
                if (b < 0)
                    b = up;
                else if (b != up)
                    array_ok = false;
            } else if (up != 0) {
                array_ok = false;
            }
            if (i > 0) {
                int& c = array->c[i - 1];
                if (c < 0)
                    c = down;
                else if (c != down)
                    array_ok = false;
            }
        }
    }

    if (girth >= 0) inv.girth = girth;
    if (connected) inv.diameter = diameter;
    if (connected && array_ok && array) inv.intersection_array = std::move(*array);
    return inv;
}

InducedSubgraph delete_vertices(const Graph& g, const VertexSet& s) {
    const int n = g.vertex_count();
    InducedSubgraph out;
    out.new_of_old.assign(n, -1);
    for (int v = 0; v < n; v++) {
        if (!s.test(v)) {
            out.new_of_old[v] = static_cast<int>(out.old_of_new.size());
            out.old_of_new.push_back(v);
        }
    }
    out.graph = Graph(static_cast<int>(out.old_of_new.size()));
    for (int nu = 0; nu < static_cast<int>(out.old_of_new.size()); nu++) {
        int u = out.old_of_new[nu];
        const VertexSet& nb = g.neighbours(u);
        for (int v = nb.next(u); v >= 0; v = nb.next(v))
            if (out.new_of_old[v] >= 0) out.graph.add_edge(nu, out.new_of_old[v]);
    }
    return out;
}

namespace {

std::string vtx(int v) { return std::to_string(v); }

// Enumerate simple 9-cycles through `root` by bounded DFS; calls fn with the
// cycle vertex sequence.  Each cycle reported once (direction fixed by
// second < last).
template <class Fn>
void for_each_9cycle_through(const Graph& g, int root, Fn&& fn) {
    std::array<int, 9> path{};
    path[0] = root;
    VertexSet used;
    used.set(root);

    auto rec = [&](auto&& self, int depth) -> void {
        int u = path[depth - 1];
        const VertexSet& nb = g.neighbours(u);
        if (depth == 9) {
            if (nb.test(root) && path[1] < path[8]) fn(path);
            return;
        }
        for (int v = nb.first(); v >= 0; v = nb.next(v)) {
            if (used.test(v)) continue;
            used.set(v);
            path[depth] = v;
            self(self, depth + 1);
            used.reset(v);
        }
    };
    rec(rec, 1);
}

}  // namespace

VerificationReport verify_level_set_properties(const Graph& g) {
    VerificationReport rep;
    rep.subject = "level-set properties";
    const int n = g.vertex_count();

    for (int root = 0; root < n; root++) {
        auto ld = bfs_levels(g, root);
        int ecc = ld.eccentricity();
        auto level_of = [&](int v) { return ld.dist[v]; };

        // (1) unique down-neighbour for every vertex at level i < 7
        for (int v = 0; v < n; v++) {
            int i = level_of(v);
            if (i < 1 || i >= 7) continue;
            int down = (g.neighbours(v) & ld.level_sets[i - 1]).count();
            rep.require(down == 1, "part1",
                        "root " + vtx(root) + " vertex " + vtx(v) + " has " +
                            std::to_string(down) + " down-neighbours");
        }

        // (2) unique geodesic to the root for levels < 7 (path counting)
        {
            std::vector<long long> cnt(n, 0);
            cnt[root] = 1;
            for (int i = 1; i <= ecc; i++) {
                for (int v : ld.levels[i]) {
                    long long c = 0;
                    const VertexSet down = g.neighbours(v) & ld.level_sets[i - 1];
                    for (int w = down.first(); w >= 0; w = down.next(w)) c += cnt[w];
                    cnt[v] = c;
                    if (i < 7)
                        rep.require(c == 1, "part2",
                                    "root " + vtx(root) + " vertex " + vtx(v) + " has " +
                                        std::to_string(c) + " geodesics");
                }
            }
        }

        // (3) levels 0..3 and 7 independent
        for (int i = 0; i <= ecc; i++) {
            if (i > 3 && i != 7) continue;
            for (int v : ld.levels[i]) {
                bool indep = (g.neighbours(v) & ld.level_sets[i]).empty();
                rep.require(indep, "part3",
                            "root " + vtx(root) + " level " + std::to_string(i) +
                                " not independent at " + vtx(v));
            }
        }

        // (4) levels 4..6 induce a perfect matching (exactly one neighbour inside)
        for (int i = 4; i <= std::min(ecc, 6); i++) {
            for (int v : ld.levels[i]) {
                int inside = (g.neighbours(v) & ld.level_sets[i]).count();
                rep.require(inside == 1, "part4",
                            "root " + vtx(root) + " level " + std::to_string(i) + " vertex " +
                                vtx(v) + " has " + std::to_string(inside) +
                                " intra-level neighbours");
            }
        }

        // (5) no two level-7 vertices share a neighbour
        if (ecc >= 7) {
            for (int w = 0; w < n; w++) {
                int c = (g.neighbours(w) & ld.level_sets[7]).count();
                rep.require(c <= 1, "part5",
                            "root " + vtx(root) + " vertex " + vtx(w) + " sees " +
                                std::to_string(c) + " level-7 vertices");
            }
        }

        // (6) for z at level 5..7 and (x,z) the last geodesic edge, the third
        // neighbour of x lies at level i-1 (x has no up-neighbour besides z)
        for (int i = 5; i <= std::min(ecc, 7); i++) {
            for (int z : ld.levels[i]) {
                const VertexSet xs = g.neighbours(z) & ld.level_sets[i - 1];
                for (int x = xs.first(); x >= 0; x = xs.next(x)) {
                    VertexSet rest = g.neighbours(x);
                    rest.reset(z);
                    if (i >= 2) rest -= ld.level_sets[i - 2];
                    bool ok = ld.level_sets[i - 1].contains(rest);
                    rep.require(ok, "part6",
                                "root " + vtx(root) + " z " + vtx(z) + " x " + vtx(x) +
                                    " has a stray neighbour outside level " +
                                    std::to_string(i - 1));
                }
            }
        }

        // (7) on any 9-cycle through the root, the off-cycle neighbour of a
        // distance-4 cycle vertex lies at distance 5
        long long cycles = 0;
        for_each_9cycle_through(g, root, [&](const std::array<int, 9>& cyc) {
            cycles++;
            VertexSet on_c;
            for (int v : cyc) on_c.set(v);
            for (int v : cyc) {
                if (level_of(v) != 4) continue;
                VertexSet off = g.neighbours(v) - on_c;
                rep.require(off.count() == 1, "part7",
                            "root " + vtx(root) + " cycle vertex " + vtx(v) +
                                " off-cycle neighbour not unique");
                for (int w = off.first(); w >= 0; w = off.next(w))
                    rep.require(level_of(w) == 5, "part7",
                                "root " + vtx(root) + " cycle vertex " + vtx(v) +
                                    " off-cycle neighbour " + vtx(w) + " at level " +
                                    std::to_string(level_of(w)));
            }
        });
        rep.counters["nine_cycles"] += cycles;
    }
    return rep;
}

}  // namespace bsv
