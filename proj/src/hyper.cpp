#include "bsv/hyper.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "bsv/mis.hpp"
#include "bsv/autom.hpp"
#include "bsv/parallel.hpp"

namespace bsv {

int Hypergraph::part_count() const {
    if (!parts) return 0;
    int r = 0;
    for (int p : *parts) r = std::max(r, p + 1);
    return r;
}

bool Hypergraph::parts_valid() const {
    if (!parts) return false;
    int r = part_count();
    for (const auto& e : edges) {
        std::vector<int> seen(r, 0);
        for (int v : e) seen[(*parts)[v]]++;
        for (int c : seen)
            if (c != 1) return false;
    }
    return true;
}

LineHypergraph line_hypergraph(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); v++)
        if (g.degree(v) == 0)
            throw std::invalid_argument("line hypergraph rejects isolated vertices");
    LineHypergraph lh{g, {}};
    auto edges = g.edges();
    lh.hyper.n_vertices = static_cast<int>(edges.size());
    std::map<Edge, int> eidx;
    for (int e = 0; e < static_cast<int>(edges.size()); e++) eidx[edges[e]] = e;
    lh.hyper.edges.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); v++) {
        const VertexSet& nb = g.neighbours(v);
        for (int u = nb.first(); u >= 0; u = nb.next(u))
            lh.hyper.edges[v].push_back(eidx.at({std::min(u, v), std::max(u, v)}));
        std::sort(lh.hyper.edges[v].begin(), lh.hyper.edges[v].end());
    }
    return lh;
}

Hypergraph hypergraph_delete_vertices(const Hypergraph& h, const std::vector<int>& del) {
    std::vector<bool> gone(h.n_vertices, false);
    for (int v : del) gone[v] = true;
    Hypergraph out;
    std::vector<int> remap(h.n_vertices, -1);
    for (int v = 0; v < h.n_vertices; v++)
        if (!gone[v]) remap[v] = out.n_vertices++;
    for (const auto& e : h.edges) {
        bool keep = true;
        for (int v : e)
            if (gone[v]) keep = false;
        if (!keep) continue;
        std::vector<int> ne;
        for (int v : e) ne.push_back(remap[v]);
        out.edges.push_back(std::move(ne));
    }
    if (h.parts) {
        std::vector<int> np;
        for (int v = 0; v < h.n_vertices; v++)
            if (!gone[v]) np.push_back((*h.parts)[v]);
        out.parts = std::move(np);
    }
    return out;
}

int hypergraph_matching_exact(const Hypergraph& h) {
    const int m = static_cast<int>(h.edges.size());
    std::vector<std::vector<bool>> conflict(m, std::vector<bool>(m, false));
    for (int i = 0; i < m; i++)
        for (int j = i + 1; j < m; j++) {
            bool meet = false;
            for (int v : h.edges[i])
                for (int w : h.edges[j])
                    if (v == w) meet = true;
            conflict[i][j] = conflict[j][i] = meet;
        }
    int best = 0;
    std::vector<bool> dead(m, false);
    auto rec = [&](auto&& self, int i, int count) -> void {
        if (count + (m - i) <= best) return;
        if (i == m) {
            best = std::max(best, count);
            return;
        }
        if (!dead[i]) {
            std::vector<int> flipped;
            for (int j = i + 1; j < m; j++)
                if (conflict[i][j] && !dead[j]) {
                    dead[j] = true;
                    flipped.push_back(j);
                }
            self(self, i + 1, count + 1);
            for (int j : flipped) dead[j] = false;
        }
        self(self, i + 1, count);
    };
    rec(rec, 0, 0);
    return best;
}

int hypergraph_cover_exact(const Hypergraph& h) {
    if (h.n_vertices > 200)
        throw std::invalid_argument("exact cover limited to 200 hypergraph vertices");
    for (const auto& e : h.edges)
        if (e.empty()) throw std::invalid_argument("empty hyperedge cannot be covered");

    const int m = static_cast<int>(h.edges.size());
    int best = h.n_vertices + 1;
    std::vector<bool> chosen(h.n_vertices, false);

    // lower bound: greedy packing of pairwise disjoint uncovered edges
    auto lower_bound = [&](const std::vector<bool>& covered) {
        std::vector<bool> used(h.n_vertices, false);
        int lb = 0;
        for (int i = 0; i < m; i++) {
            if (covered[i]) continue;
            bool free = true;
            for (int v : h.edges[i])
                if (used[v]) free = false;
            if (!free) continue;
            for (int v : h.edges[i]) used[v] = true;
            lb++;
        }
        return lb;
    };

    auto rec = [&](auto&& self, int size) -> void {
        std::vector<bool> covered(m, false);
        int uncovered = -1, uncovered_sz = h.n_vertices + 1;
        for (int i = 0; i < m; i++) {
            covered[i] = false;
            for (int v : h.edges[i])
                if (chosen[v]) covered[i] = true;
            if (!covered[i] && static_cast<int>(h.edges[i].size()) < uncovered_sz) {
                uncovered = i;
                uncovered_sz = static_cast<int>(h.edges[i].size());
            }
        }
        if (uncovered < 0) {
            best = std::min(best, size);
            return;
        }
        if (size + lower_bound(covered) >= best) return;
        // unit propagation happens naturally: a singleton edge gives one branch
        for (int v : h.edges[uncovered]) {
            chosen[v] = true;
            self(self, size + 1);
            chosen[v] = false;
        }
    };
    rec(rec, 0);
    return best;
}

MatchingCover matching_and_cover(const Hypergraph& h) {
    return {hypergraph_matching_exact(h), hypergraph_cover_exact(h)};
}

MatchingCover matching_and_cover(const LineHypergraph& lh) {
    MatchingCover mc;
    mc.nu = max_independent_set(lh.base).size;
    // minimum edge cover of the base: |V| - mu, mu via the line graph
    auto edges = lh.base.edges();
    const int m = static_cast<int>(edges.size());
    if (m > kMaxVertices) throw std::invalid_argument("base too large for the line-graph route");
    Graph line(m);
    for (int i = 0; i < m; i++)
        for (int j = i + 1; j < m; j++) {
            auto [a, b] = edges[i];
            auto [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d) line.add_edge(i, j);
        }
    // mu never exceeds floor(n/2), so proving that threshold is exact in
    // every case and exits as soon as a perfect matching turns up
    int mu = alpha_avoiding(line, {}, lh.base.vertex_count() / 2).size;
    mc.tau = lh.base.vertex_count() - mu;
    return mc;
}

namespace {

class HamiltonSearch {
  public:
    explicit HamiltonSearch(const Graph& g) : g_(g), n_(g.vertex_count()) {}

    std::optional<std::vector<int>> run() {
        if (n_ < 3 || !is_connected(g_)) return std::nullopt;
        for (int v = 0; v < n_; v++)
            if (g_.degree(v) < 2) return std::nullopt;
        path_.reserve(n_);
        path_.push_back(0);
        visited_.set(0);
        if (extend(0)) return path_;
        return std::nullopt;
    }

  private:
    bool extend(int end) {
        if (static_cast<int>(path_.size()) == n_) return g_.adjacent(end, 0);

        // every vertex still to be visited needs two usable connections; an
        // unvisited neighbour of `end` down to one other option forces the move
        int forced = -1;
        VertexSet nb_end = g_.neighbours(end) - visited_;
        for (int w = nb_end.first(); w >= 0; w = nb_end.next(w)) {
            int r = (g_.neighbours(w) - visited_).count() + (g_.adjacent(w, 0) ? 1 : 0);
            if (r <= 1) {
                if (forced >= 0) return false;
                forced = w;
            }
        }
        for (int u = 0; u < n_; u++) {
            if (visited_.test(u)) continue;
            int avail = (g_.neighbours(u) - visited_).count() + (g_.adjacent(u, end) ? 1 : 0) +
                        (g_.adjacent(u, 0) ? 1 : 0);
            if (avail < 2) return false;
        }
        if (!rest_connected(end)) return false;

        VertexSet cands;
        if (forced >= 0)
            cands.set(forced);
        else
            cands = nb_end;
        for (int w = cands.first(); w >= 0; w = cands.next(w)) {
            visited_.set(w);
            path_.push_back(w);
            if (extend(w)) return true;
            visited_.reset(w);
            path_.pop_back();
        }
        return false;
    }

    bool rest_connected(int end) {
        VertexSet allowed = VertexSet::full(n_) - visited_;
        int want = allowed.count();
        allowed.set(end);
        VertexSet reached;
        reached.set(end);
        std::vector<int> stack{end};
        int seen = 0;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            VertexSet nxt = (g_.neighbours(u) & allowed) - reached;
            for (int v = nxt.first(); v >= 0; v = nxt.next(v)) {
                reached.set(v);
                seen++;
                stack.push_back(v);
            }
        }
        return seen == want;
    }

    const Graph& g_;
    int n_;
    std::vector<int> path_;
    VertexSet visited_;
};

}  // namespace

std::optional<std::vector<int>> hamilton_cycle(const Graph& g) { return HamiltonSearch(g).run(); }

std::optional<std::vector<int>> three_edge_coloring(const Graph& g) {
    if (!g.is_cubic()) throw std::invalid_argument("three_edge_coloring requires a cubic graph");
    const auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    const int n = g.vertex_count();
    std::map<Edge, int> eidx;
    for (int e = 0; e < m; e++) eidx[edges[e]] = e;
    auto edge_id = [&](int u, int v) { return eidx.at({std::min(u, v), std::max(u, v)}); };

    if (auto hc = hamilton_cycle(g)) {
        // alternate two colors along the cycle (n is even for cubic graphs),
        // third color on the chords, which form a perfect matching
        std::vector<int> color(m, 2);
        for (int i = 0; i < n; i++) color[edge_id((*hc)[i], (*hc)[(i + 1) % n])] = i % 2;
        return color;
    }

    // direct backtracking; colors of the three edges at vertex 0 fixed, which
    // is sound up to color permutation
    std::vector<std::array<int, 3>> inc(n, {-1, -1, -1});
    for (int e = 0; e < m; e++)
        for (int v : {edges[e].first, edges[e].second})
            for (int s = 0; s < 3; s++)
                if (inc[v][s] < 0) {
                    inc[v][s] = e;
                    break;
                }
    std::vector<int> color(m, -1);
    std::vector<int> used(n, 0);  // bitmask of colors present at a vertex
    auto set_color = [&](int e, int c) {
        color[e] = c;
        used[edges[e].first] |= 1 << c;
        used[edges[e].second] |= 1 << c;
    };
    auto clear_color = [&](int e) {
        used[edges[e].first] &= ~(1 << color[e]);
        used[edges[e].second] &= ~(1 << color[e]);
        color[e] = -1;
    };
    for (int s = 0; s < 3; s++) set_color(inc[0][s], s);

    auto rec = [&](auto&& self) -> bool {
        int pick = -1, pick_free = 4;
        for (int e = 0; e < m; e++) {
            if (color[e] >= 0) continue;
            int mask = used[edges[e].first] | used[edges[e].second];
            int free = 3 - std::popcount(static_cast<unsigned>(mask));
            if (free == 0) return false;
            if (free < pick_free) {
                pick_free = free;
                pick = e;
            }
        }
        if (pick < 0) return true;
        int mask = used[edges[pick].first] | used[edges[pick].second];
        for (int c = 0; c < 3; c++) {
            if (mask & (1 << c)) continue;
            set_color(pick, c);
            if (self(self)) return true;
            clear_color(pick);
        }
        return false;
    };
    if (rec(rec)) return color;
    return std::nullopt;
}

LovaszReport verify_lovasz_property(const Graph& g, LovaszMode mode, const LovaszOptions& opt) {
    LovaszReport rep;
    rep.mode = mode;
    const auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    auto first = max_independent_set(g);
    rep.alpha = first.size;

    // maximum independent sets found along the way certify later pairs for
    // free whenever one avoids all four endpoints; only the pass verdict can
    // come from the cache, so records stay deterministic
    std::mutex cache_mu;
    std::vector<VertexSet> cache{first.witness};
    constexpr std::size_t kCacheCap = 64;
    auto cached_pass = [&](const VertexSet& forb) {
        std::lock_guard lock(cache_mu);
        for (const auto& w : cache)
            if (!w.intersects(forb)) return true;
        return false;
    };
    auto cache_witness = [&](const VertexSet& w) {
        std::lock_guard lock(cache_mu);
        if (cache.size() < kCacheCap) cache.push_back(w);
    };
    auto avoiding_alpha = [&](const VertexSet& forb) {
        if (cached_pass(forb)) return rep.alpha;
        auto r = alpha_avoiding(g, forb, rep.alpha);
        if (r.size >= rep.alpha) cache_witness(r.witness);
        return std::min(r.size, rep.alpha);
    };

    std::vector<int> edge_alpha(m);
    parallel_for(m, opt.jobs, [&](std::int64_t e) {
        edge_alpha[e] = avoiding_alpha(VertexSet::of({edges[e].first, edges[e].second}));
    });

    std::vector<std::pair<int, int>> pairs;
    if (mode == LovaszMode::orbit_reduced) {
        try {
            auto gd = automorphism_group(g, AutOptions{opt.aut_node_budget});
            std::set<std::pair<int, int>> uniq;
            for (const auto& orbit : gd.edge_orbits) {
                int r = orbit.front();
                for (int f = 0; f < m; f++)
                    if (f != r) uniq.emplace(std::min(r, f), std::max(r, f));
            }
            pairs.assign(uniq.begin(), uniq.end());
        } catch (const AutBudgetExceeded&) {
            rep.fell_back_to_brute = true;
        }
    }
    if (mode == LovaszMode::brute || rep.fell_back_to_brute) {
        pairs.reserve(static_cast<std::size_t>(m) * (m - 1) / 2);
        for (int e = 0; e < m; e++)
            for (int f = e + 1; f < m; f++) pairs.emplace_back(e, f);
    }

    // fixed chunk size keeps records independent of the job count, including
    // the identity of the first failing pair under stop_on_first_failure
    constexpr std::int64_t kChunk = 256;
    const std::int64_t total = static_cast<std::int64_t>(pairs.size());
    std::vector<int> achieved(std::min(kChunk, total > 0 ? total : 1));
    std::vector<char> was_pruned(achieved.size());
    for (std::int64_t base = 0; base < total; base += kChunk) {
        const std::int64_t cnt = std::min(kChunk, total - base);
        parallel_for(cnt, opt.jobs, [&](std::int64_t i) {
            auto [e, f] = pairs[base + i];
            if (edge_alpha[e] < rep.alpha || edge_alpha[f] < rep.alpha) {
                achieved[i] = std::min(edge_alpha[e], edge_alpha[f]);
                was_pruned[i] = 1;
                return;
            }
            was_pruned[i] = 0;
            achieved[i] = avoiding_alpha(VertexSet::of(
                {edges[e].first, edges[e].second, edges[f].first, edges[f].second}));
        });
        bool failed = false;
        for (std::int64_t i = 0; i < cnt; i++) {
            rep.pairs_checked++;
            if (was_pruned[i]) rep.pruned++;
            if (achieved[i] < rep.alpha) {
                auto [e, f] = pairs[base + i];
                rep.failures.push_back({edges[e], edges[f], achieved[i]});
                failed = true;
            }
        }
        if (failed && opt.stop_on_first_failure) break;
    }
    return rep;
}

WitnessResult weak_conjecture_witness(const Graph& g, int k, const WitnessOptions& opt) {
    if (k < 1 || k > 2) throw std::invalid_argument("witness search supports k = 1 or 2");
    WitnessResult res;
    const auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    const int alpha = max_independent_set(g).size;

    auto endpoints = [&](std::span<const int> ids) {
        VertexSet s;
        for (int e : ids) {
            s.set(edges[e].first);
            s.set(edges[e].second);
        }
        return s;
    };
    // cached independent sets dismiss most candidate subsets without touching
    // the solver: a set of size s avoiding the endpoints certifies
    // alpha(g - U) >= s
    std::vector<std::pair<VertexSet, int>> cache{{max_independent_set(g).witness, alpha}};
    auto cached_ge = [&](const VertexSet& forb, int bound) {
        for (const auto& [w, s] : cache)
            if (s >= bound && !w.intersects(forb)) return true;
        return false;
    };
    auto remember = [&](const MisResult& r) {
        if (cache.size() < 64) cache.emplace_back(r.witness, r.size);
    };
    // exact drop when >= k, nullopt otherwise
    auto test = [&](std::span<const int> ids) -> std::optional<int> {
        VertexSet forb = endpoints(ids);
        if (cached_ge(forb, alpha - k + 1)) return std::nullopt;
        auto r = alpha_avoiding(g, forb, alpha - k + 1);
        if (r.size >= alpha - k + 1) {
            remember(r);
            return std::nullopt;
        }
        return alpha - r.size;
    };
    auto finish = [&](std::span<const int> ids, int drop) {
        res.status = WitnessResult::Status::found;
        res.achieved_drop = drop;
        for (int e : ids) res.edges.push_back(edges[e]);
        std::sort(res.edges.begin(), res.edges.end());
        return res;
    };

    // greedy seeding: edges whose own deletion hurts alpha most come first
    std::vector<int> order(m), edge_drop(m);
    for (int e = 0; e < m; e++) {
        order[e] = e;
        int id[1] = {e};
        edge_drop[e] = alpha - std::min(alpha, alpha_avoiding(g, endpoints(id), alpha).size);
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return edge_drop[a] > edge_drop[b]; });

    if (k == 1) {
        for (int i = 0; i < m; i++)
            for (int j = i + 1; j < m; j++) {
                int ids[2] = {order[i], order[j]};
                if (auto drop = test(ids)) return finish(ids, *drop);
            }
        res.status = WitnessResult::Status::exhausted;
        return res;
    }

    // k == 2: exhaustive over 4-subsets in seeded order, with a monotone
    // prune: each further edge deletes at most two vertices, dropping alpha
    // by at most two
    std::uint64_t tested = 0;
    std::array<int, 4> pick{};
    auto rec = [&](auto&& self, int depth, int start) -> std::optional<WitnessResult> {
        if (depth == 4) {
            tested++;
            if (auto drop = test(pick)) return finish(pick, *drop);
            return std::nullopt;
        }
        for (int i = start; i < m; i++) {
            if (tested > opt.solve_budget) {
                res.status = WitnessResult::Status::budget_exceeded;
                return res;
            }
            pick[depth] = order[i];
            std::span<const int> prefix(pick.data(), depth + 1);
            VertexSet forb = endpoints(prefix);
            int ap = alpha;
            if (!cached_ge(forb, alpha)) {
                auto r = alpha_avoiding(g, forb, alpha);
                if (r.size >= alpha) remember(r);
                ap = std::min(alpha, r.size);
            }
            if (ap - 2 * (3 - depth) > alpha - k) continue;  // cannot reach the drop
            if (auto r = self(self, depth + 1, i + 1)) return *r;
        }
        return std::nullopt;
    };
    if (auto r = rec(rec, 0, 0)) return *r;
    if (res.status != WitnessResult::Status::budget_exceeded)
        res.status = WitnessResult::Status::exhausted;
    return res;
}

namespace {

struct CaseCert {
    const char* name;
    std::array<const char*, 4> quad;  // u', v', x', y'
    std::array<int, 4> expect;        // d(u,x) d(u,y) d(v,x) d(v,y)
    std::vector<const char*> path;
    std::vector<const char*> path2;
    int kind;  // 0: path u'->y', 1: path u'->z, 2: two disjoint geodesics, 3: 9-cycle case
};

struct CycleCert {
    const char* root;
    int cycle;  // 0 or 1
    const char* z;
    const char* target;
};

const std::vector<const char*> kCycle1 = {"2e", "2f", "2c", "4c", "6c", "6f", "6e", "6b", "2b"};
const std::vector<const char*> kCycle2 = {"2e", "2f", "2d", "10d", "10f", "10e", "10b", "6b", "2b"};

const std::vector<CaseCert> kCases = {
    {"1.a d=0", {"11a", "12a", "12a", "13a"}, {1, 2, 0, 1}, {"11a", "12a", "13a"}, {}, 0},
    {"1.a d=1", {"8b", "12b", "12e", "12f"}, {2, 3, 1, 2}, {"8b", "12b", "12e", "12f"}, {}, 0},
    {"1.a d=2", {"2c", "4c", "8c", "10c"}, {3, 4, 2, 3}, {"2c", "4c", "6c", "8c", "10c"}, {}, 0},
    {"1.a d=3",
     {"16a", "15a", "12a", "11a"},
     {4, 5, 3, 4},
     {"16a", "15a", "14a", "13a", "12a", "11a"},
     {},
     0},
    {"1.a d=4",
     {"1a", "17a", "13a", "12a"},
     {5, 6, 4, 5},
     {"1a", "17a", "16a", "15a", "14a", "13a", "12a"},
     {},
     0},
    {"1.a d=5",
     {"1a", "17a", "12a", "11a"},
     {6, 7, 5, 6},
     {"1a", "17a", "16a", "15a", "14a", "13a", "12a", "11a"},
     {},
     0},
    {"1.b d=3",
     {"1a", "17a", "14a", "14e"},
     {4, 4, 3, 4},
     {"1a", "17a", "16a", "15a", "14a", "13a"},
     {},
     1},
    {"1.b d=4",
     {"1a", "17a", "13a", "13e"},
     {5, 5, 4, 4},
     {"1a", "17a", "16a", "15a", "14a", "13a", "12a"},
     {},
     1},
    {"1.b d=5",
     {"13a", "12a", "7a", "7e"},
     {6, 6, 5, 5},
     {"13a", "12a", "11a", "10a", "9a", "8a", "7a", "6a"},
     {},
     1},
    {"1.c",
     {"17a", "1a", "7a", "7e"},
     {7, 6, 6, 6},
     {"17a", "1a", "2a", "3a", "4a", "5a", "6a", "7a"},
     {"17a", "16a", "16e", "16b", "3b", "7b", "7e", "7a"},
     2},
    {"2 d=5", {"2b", "2e", "8c", "10c"}, {5, 5, 5, 5}, {}, {}, 3},
};

const std::vector<CycleCert> kCycleCerts = {
    {"2e", 0, "6c", "8c"},
    {"2e", 1, "10f", "10c"},
    {"2b", 0, "6c", "8c"},
    {"2b", 1, "10f", "10c"},
};

}  // namespace

VerificationReport verify_case_certificates(const LabeledBs& bs) {
    VerificationReport rep;
    rep.subject = "case certificates";
    const Graph& g = bs.graph;
    auto vx = [&](const char* label) {
        auto v = LabeledBs::vertex_by_label(label);
        if (!v) throw std::logic_error(std::string("bad label in case table: ") + label);
        return *v;
    };
    auto to_path = [&](const std::vector<const char*>& labels) {
        std::vector<int> p;
        for (auto* l : labels) p.push_back(vx(l));
        return p;
    };
    auto path_valid = [&](const std::vector<int>& p) {
        std::set<int> s(p.begin(), p.end());
        if (s.size() != p.size()) return false;
        for (std::size_t i = 0; i + 1 < p.size(); i++)
            if (!g.adjacent(p[i], p[i + 1])) return false;
        return true;
    };

    for (const auto& c : kCases) {
        int u = vx(c.quad[0]), v = vx(c.quad[1]), x = vx(c.quad[2]), y = vx(c.quad[3]);
        auto du = bfs_levels(g, u).dist;
        auto dv = bfs_levels(g, v).dist;
        std::array<int, 4> got{du[x], du[y], dv[x], dv[y]};
        rep.require(got == c.expect, std::string(c.name) + "/distances",
                    "got (" + std::to_string(got[0]) + "," + std::to_string(got[1]) + "," +
                        std::to_string(got[2]) + "," + std::to_string(got[3]) + ")");

        if (c.kind == 0 || c.kind == 1) {
            auto p = to_path(c.path);
            bool ok = path_valid(p) && p.front() == u && p[1] == v && p[p.size() - 2] == x;
            if (c.kind == 0) ok = ok && p.back() == y;
            if (c.kind == 1) ok = ok && p.back() != y && g.adjacent(p.back(), x);
            rep.require(ok, std::string(c.name) + "/path", "listed path malformed");
            int len = static_cast<int>(p.size()) - 1;
            rep.require(du[p.back()] == len, std::string(c.name) + "/geodesic",
                        "path length " + std::to_string(len) + " but dist " +
                            std::to_string(du[p.back()]));
        }
        if (c.kind == 2) {
            auto p1 = to_path(c.path), p2 = to_path(c.path2);
            bool ok1 = path_valid(p1) && p1.front() == u && p1.back() == x && p1[1] == v;
            bool ok2 = path_valid(p2) && p2.front() == u && p2.back() == x &&
                       p2[p2.size() - 2] == y;
            rep.require(ok1 && ok2, std::string(c.name) + "/paths", "listed paths malformed");
            rep.require(du[x] == 7 && static_cast<int>(p1.size()) == 8 &&
                            static_cast<int>(p2.size()) == 8,
                        std::string(c.name) + "/geodesic", "both paths must be length-7 geodesics");
            std::set<int> inner(p1.begin() + 1, p1.end() - 1);
            bool disjoint = true;
            for (std::size_t i = 1; i + 1 < p2.size(); i++)
                if (inner.count(p2[i])) disjoint = false;
            rep.require(disjoint, std::string(c.name) + "/internally-disjoint",
                        "geodesics share an interior vertex");
        }
        if (c.kind == 3) {
            for (const auto& cc : kCycleCerts) {
                auto cyc = to_path(cc.cycle == 0 ? kCycle1 : kCycle2);
                std::string name = std::string(c.name) + "/cycle" + std::to_string(cc.cycle + 1) +
                                   "-" + cc.root;
                bool valid = path_valid(cyc) && cyc.size() == 9 &&
                             g.adjacent(cyc.front(), cyc.back());
                rep.require(valid, name + "/nine-cycle", "listed 9-cycle malformed");
                int root = vx(cc.root), z = vx(cc.z), target = vx(cc.target);
                bool on_cycle = false;
                VertexSet on_c;
                for (int w : cyc) {
                    on_c.set(w);
                    if (w == root) on_cycle = true;
                }
                rep.require(on_cycle && on_c.test(z), name + "/membership",
                            "root or z not on the cycle");
                auto dr = bfs_levels(g, root).dist;
                rep.require(dr[z] == 4, name + "/z-at-4",
                            std::string(cc.z) + " at dist " + std::to_string(dr[z]));
                VertexSet off = g.neighbours(z) - on_c;
                rep.require(off.count() == 1 && off.test(target), name + "/off-cycle",
                            "unique off-cycle neighbour mismatch");
                rep.require(dr[target] == 5, name + "/dist5",
                            std::string(cc.target) + " at dist " + std::to_string(dr[target]));
            }
        }

        // a maximum independent set avoiding all four endpoints
        VertexSet forb = VertexSet::of({u, v, x, y});
        auto mis = alpha_avoiding(g, forb, 43);
        bool avoid_ok = mis.size >= 43 && check_independent(g, mis.witness) &&
                        !mis.witness.intersects(forb);
        rep.require(avoid_ok, std::string(c.name) + "/avoiding-set",
                    "no size-43 independent set avoiding the endpoints");
    }
    return rep;
}

}  // namespace bsv
