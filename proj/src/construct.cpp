#include "bsv/construct.hpp"

#include <cstdlib>
#include <numeric>

namespace bsv {

void HExpansionSpec::validate() const {
    if (n < 5) throw std::invalid_argument("expansion order must be at least 5");
    if (n % 2 == 0) throw std::invalid_argument("expansion order must be odd");
    for (int o : offsets)
        if (o < 1 || o > n / 2) throw std::invalid_argument("step offset out of range 1..n/2");
}

std::array<int, 4> HExpansionSpec::cycle_counts() const {
    std::array<int, 4> out{};
    for (int i = 0; i < 4; i++) out[i] = std::gcd(offsets[i], n);
    return out;
}

Graph build_h_expansion(const HExpansionSpec& spec) {
    spec.validate();
    const int n = spec.n;
    Graph g(6 * n);
    auto idx = [](int i, int letter) { return 6 * i + letter; };  // i is 0-based here
    for (int i = 0; i < n; i++) {
        g.add_edge(idx(i, kLetterE), idx(i, kLetterF));
        g.add_edge(idx(i, kLetterA), idx(i, kLetterE));
        g.add_edge(idx(i, kLetterB), idx(i, kLetterE));
        g.add_edge(idx(i, kLetterC), idx(i, kLetterF));
        g.add_edge(idx(i, kLetterD), idx(i, kLetterF));
    }
    for (int letter = 0; letter < 4; letter++) {
        int step = spec.offsets[letter];
        for (int i = 0; i < n; i++) g.add_edge(idx(i, letter), idx((i + step) % n, letter));
    }
    return g;
}

LabeledBs build_biggs_smith() { return LabeledBs{build_h_expansion(HExpansionSpec{})}; }

std::optional<int> LabeledBs::vertex_by_label(std::string_view label) {
    if (label.size() < 2 || label.size() > 3) return std::nullopt;
    char t = label.back();
    if (t < 'a' || t > 'f') return std::nullopt;
    int i = 0;
    for (char c : label.substr(0, label.size() - 1)) {
        if (c < '0' || c > '9') return std::nullopt;
        i = i * 10 + (c - '0');
    }
    if (i < 1 || i > 17) return std::nullopt;
    return index_of(i, t - 'a');
}

VerificationReport verify_acycle_geodesics(const LabeledBs& bs) {
    VerificationReport rep;
    rep.subject = "a-cycle geodesics";
    for (int i = 1; i <= 17; i++) {
        auto ld = bfs_levels(bs.graph, LabeledBs::index_of(i, kLetterA));
        for (int j = 1; j <= 17; j++) {
            int step = std::abs(i - j);
            int d = std::min(step, 17 - step);
            if (d > 7) continue;
            int got = ld.dist[LabeledBs::index_of(j, kLetterA)];
            rep.require(got == d, "acycle-geodesic",
                        LabeledBs::label_of(LabeledBs::index_of(i, kLetterA)) + ".." +
                            LabeledBs::label_of(LabeledBs::index_of(j, kLetterA)) + " dist " +
                            std::to_string(got) + " expected " + std::to_string(d));
        }
    }
    return rep;
}

namespace {

// Unique geodesic from x down to the root, as a vertex list ending at the
// root.  Returns empty on any non-unique step.
std::vector<int> walk_down(const Graph& g, const LevelDecomposition& ld, int x) {
    std::vector<int> path{x};
    int cur = x;
    while (ld.dist[cur] > 0) {
        VertexSet down = g.neighbours(cur) & ld.level_sets[ld.dist[cur] - 1];
        if (down.count() != 1) return {};
        cur = down.first();
        path.push_back(cur);
    }
    return path;
}

std::string pair_witness(const LabeledBs& bs, int u, int x, int y) {
    return "u=" + bs.label_of(u) + " edge (" + bs.label_of(x) + "," + bs.label_of(y) + ")";
}

}  // namespace

VerificationReport verify_displaced_paths(const LabeledBs& bs) {
    VerificationReport rep;
    rep.subject = "displaced paths";
    const Graph& g = bs.graph;

    for (int u = 0; u < g.vertex_count(); u++) {
        auto ld = bfs_levels(g, u);
        for (int i = 4; i <= 6 && i <= ld.eccentricity(); i++) {
            for (int x : ld.levels[i]) {
                VertexSet inside = g.neighbours(x) & ld.level_sets[i];
                if (inside.count() != 1) {
                    rep.require(false, "matching-edge",
                                "u=" + bs.label_of(u) + " vertex " + bs.label_of(x) +
                                    " lacks a unique intra-level edge at level " +
                                    std::to_string(i));
                    continue;
                }
                int y = inside.first();
                if (y < x) continue;  // handle each intra-level edge once

                auto px = walk_down(g, ld, x);
                auto py = walk_down(g, ld, y);
                if (px.empty() || py.empty()) {
                    rep.require(false, "unique-geodesic", pair_witness(bs, u, x, y));
                    continue;
                }
                // first common vertex, scanning from the top level down
                int meet = -1;
                VertexSet on_py;
                for (int v : py) on_py.set(v);
                for (int v : px)
                    if (on_py.test(v)) {
                        meet = v;
                        break;
                    }
                rep.require(meet >= 0 && ld.dist[meet] == i - 4, "first-meet",
                            pair_witness(bs, u, x, y) + " meets at level " +
                                (meet >= 0 ? std::to_string(ld.dist[meet]) : "none") +
                                " expected " + std::to_string(i - 4));

                if (i == 6) {
                    // 4-displaced paths: geodesic to level 4, the matching edge
                    // inside D_4, then the geodesic to u; they may share only u.
                    auto displaced = [&](const std::vector<int>& geo) -> std::vector<int> {
                        std::vector<int> p(geo.begin(), geo.begin() + 3);  // levels 6,5,4
                        int g4 = p.back();
                        VertexSet mate = g.neighbours(g4) & ld.level_sets[4];
                        if (mate.count() != 1) return {};
                        int z = mate.first();
                        auto rest = walk_down(g, ld, z);
                        if (rest.empty()) return {};
                        p.insert(p.end(), rest.begin(), rest.end());
                        return p;
                    };
                    auto dx = displaced(px);
                    auto dy = displaced(py);
                    if (dx.empty() || dy.empty()) {
                        rep.require(false, "displaced-path", pair_witness(bs, u, x, y));
                        continue;
                    }
                    VertexSet on_dy;
                    for (int v : dy) on_dy.set(v);
                    bool only_u = true;
                    for (int v : dx)
                        if (on_dy.test(v) && v != u) only_u = false;
                    rep.require(only_u, "displaced-disjoint", pair_witness(bs, u, x, y));
                }
            }
        }
    }
    return rep;
}

}  // namespace bsv
