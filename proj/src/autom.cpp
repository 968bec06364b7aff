#include "bsv/autom.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace bsv {

Permutation identity_permutation(int n) {
    Permutation p;
    p.to.resize(n);
    for (int v = 0; v < n; v++) p.to[v] = v;
    return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    Permutation p;
    p.to.resize(b.size());
    for (int v = 0; v < b.size(); v++) p.to[v] = a.to[b.to[v]];
    return p;
}

Permutation inverse(const Permutation& p) {
    Permutation q;
    q.to.resize(p.size());
    for (int v = 0; v < p.size(); v++) q.to[p.to[v]] = v;
    return q;
}

bool is_bijection(const Permutation& p) {
    std::vector<bool> seen(p.size(), false);
    for (int v : p.to) {
        if (v < 0 || v >= p.size() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

std::string cycle_notation(const Permutation& p) {
    std::string out;
    std::vector<bool> done(p.size(), false);
    for (int v = 0; v < p.size(); v++) {
        if (done[v] || p.to[v] == v) continue;
        out += "(";
        int c = v;
        bool first = true;
        while (!done[c]) {
            done[c] = true;
            if (!first) out += " ";
            out += std::to_string(c);
            first = false;
            c = p.to[c];
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

bool is_automorphism(const Graph& g, const Permutation& p) {
    if (p.size() != g.vertex_count()) throw std::invalid_argument("permutation size mismatch");
    if (!is_bijection(p)) throw std::invalid_argument("map is not a bijection");
    for (auto [u, v] : g.edges())
        if (!g.adjacent(p(u), p(v))) return false;
    return true;  // bijective edge-to-edge with equal counts preserves non-edges
}

namespace {

constexpr std::uint16_t kUnreach = 0xFFFF;

struct DistanceData {
    int n = 0;
    std::vector<std::vector<std::uint16_t>> dist;  // [v][u]
    std::vector<std::vector<VertexSet>> klass;     // [v][d], last entry = unreachable
    int nclasses = 0;                              // distance classes incl. unreachable

    int class_of(int v, int u) const {
        std::uint16_t d = dist[v][u];
        return d == kUnreach ? nclasses - 1 : d;
    }
};

DistanceData build_distances(const Graph& g) {
    DistanceData dd;
    dd.n = g.vertex_count();
    dd.dist.resize(dd.n);
    int max_d = 0;
    for (int v = 0; v < dd.n; v++) {
        auto ld = bfs_levels(g, v);
        dd.dist[v].resize(dd.n);
        for (int u = 0; u < dd.n; u++)
            dd.dist[v][u] = ld.dist[u] < 0 ? kUnreach : static_cast<std::uint16_t>(ld.dist[u]);
        max_d = std::max(max_d, ld.eccentricity());
    }
    dd.nclasses = max_d + 2;
    dd.klass.assign(dd.n, std::vector<VertexSet>(dd.nclasses));
    for (int v = 0; v < dd.n; v++)
        for (int u = 0; u < dd.n; u++) dd.klass[v][dd.class_of(v, u)].set(u);
    return dd;
}

// Individualization search state: per-vertex candidate image sets, refined by
// degree plus distance signatures against every assigned vertex.
struct SearchState {
    std::vector<VertexSet> cand;
    std::vector<int> img;   // -1 while unmapped
    std::vector<int> pre;   // inverse image
    int mapped = 0;
};

class AutEngine {
  public:
    AutEngine(const Graph& g, const DistanceData& dd, std::uint64_t budget)
        : g_(g), n_(g.vertex_count()), dd_(dd), budget_(budget) {
        // initial candidate classes: identical sorted distance rows
        std::map<std::vector<std::uint16_t>, VertexSet> sig_class;
        std::vector<const std::vector<std::uint16_t>*> sig_of(n_);
        for (int v = 0; v < n_; v++) {
            auto row = dd_.dist[v];
            std::sort(row.begin(), row.end());
            auto [it, _] = sig_class.try_emplace(std::move(row));
            it->second.set(v);
            sig_of[v] = &it->first;
        }
        init_.cand.resize(n_);
        init_.img.assign(n_, -1);
        init_.pre.assign(n_, -1);
        for (int v = 0; v < n_; v++) init_.cand[v] = sig_class[*sig_of[v]];
    }

    const SearchState& initial() const { return init_; }

    // Refine all candidate sets against a new assignment x -> y, then
    // propagate forced singletons.  False on a dead end.
    bool assign(SearchState& st, int x, int y) {
        if (st.img[x] >= 0) return st.img[x] == y;
        if (!st.cand[x].test(y) || st.pre[y] >= 0) return false;
        st.img[x] = y;
        st.pre[y] = x;
        st.mapped++;
        for (int u = 0; u < n_; u++) {
            if (st.img[u] >= 0) continue;
            st.cand[u] &= dd_.klass[y][dd_.class_of(x, u)];
            st.cand[u].reset(y);
        }
        // singleton propagation to a fixed point
        bool changed = true;
        while (changed) {
            changed = false;
            for (int u = 0; u < n_; u++) {
                if (st.img[u] >= 0) continue;
                int c = st.cand[u].count();
                if (c == 0) return false;
                if (c == 1) {
                    if (!assign(st, u, st.cand[u].first())) return false;
                    changed = true;
                }
            }
        }
        return true;
    }

    // One automorphism extending the state, or nullopt.
    std::optional<Permutation> find_first(const SearchState& st) {
        if (++nodes_ > budget_) throw AutBudgetExceeded{};
        if (st.mapped == n_) {
            Permutation p{st.img};
            return is_automorphism(g_, p) ? std::optional(p) : std::nullopt;
        }
        int x = pick_branch_vertex(st);
        const VertexSet cands = st.cand[x];
        for (int y = cands.first(); y >= 0; y = cands.next(y)) {
            SearchState child = st;
            if (!assign(child, x, y)) continue;
            if (auto p = find_first(child)) return p;
        }
        return std::nullopt;
    }

    // Unmapped vertex with the smallest candidate set (the target cell).
    int pick_branch_vertex(const SearchState& st) const {
        int best = -1, best_c = kMaxVertices + 1;
        for (int u = 0; u < n_; u++) {
            if (st.img[u] >= 0) continue;
            int c = st.cand[u].count();
            if (c < best_c) {
                best_c = c;
                best = u;
            }
        }
        return best;
    }

    std::uint64_t nodes() const { return nodes_; }

  private:
    const Graph& g_;
    int n_;
    const DistanceData& dd_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    SearchState init_;
};

struct PermHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = v.size();
        for (int x : v) h = h * 1000003u + static_cast<std::size_t>(x) + 1;
        return h;
    }
};

// Greedy generating subset verified by explicit closure; only attempted for
// groups small enough to enumerate.
std::vector<Permutation> thin_generators(const std::vector<Permutation>& gens,
                                         std::uint64_t order, int n) {
    constexpr std::uint64_t kEnumCap = 200'000;
    if (order > kEnumCap || gens.empty()) return gens;
    std::vector<Permutation> out;
    std::unordered_set<std::vector<int>, PermHash> have;
    have.insert(identity_permutation(n).to);
    for (const auto& gen : gens) {
        if (have.count(gen.to)) continue;
        out.push_back(gen);
        // recompute the closure under the enlarged generating set
        have.clear();
        std::vector<std::vector<int>> queue{identity_permutation(n).to};
        have.insert(queue.front());
        for (std::size_t head = 0; head < queue.size(); head++) {
            for (const auto& g2 : out) {
                Permutation prod = compose(Permutation{queue[head]}, g2);
                if (have.insert(prod.to).second) queue.push_back(prod.to);
            }
        }
        if (have.size() == order) break;
    }
    if (have.size() != order) return gens;  // give up, keep the transversals
    return out;
}

std::vector<std::vector<int>> orbits_of_points(int n, const std::vector<Permutation>& gens) {
    std::vector<int> orbit_id(n, -1);
    std::vector<std::vector<int>> orbits;
    for (int v = 0; v < n; v++) {
        if (orbit_id[v] >= 0) continue;
        int id = static_cast<int>(orbits.size());
        orbits.push_back({});
        std::vector<int> stack{v};
        orbit_id[v] = id;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            orbits[id].push_back(u);
            for (const auto& g : gens) {
                int w = g(u);
                if (orbit_id[w] < 0) {
                    orbit_id[w] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(orbits[id].begin(), orbits[id].end());
    }
    return orbits;
}

}  // namespace

GroupDescription automorphism_group(const Graph& g, const AutOptions& opt) {
    const int n = g.vertex_count();
    GroupDescription gd;
    if (n == 0) return gd;

    DistanceData dd = build_distances(g);
    AutEngine engine(g, dd, opt.node_budget);

    std::vector<Permutation> transversals;
    SearchState st = engine.initial();

    while (true) {
        int b = -1, best_c = kMaxVertices + 1;
        for (int u = 0; u < n; u++) {
            if (st.img[u] >= 0) continue;
            int c = st.cand[u].count();
            if (c > 1 && c < best_c) {
                best_c = c;
                b = u;
            }
        }
        if (b < 0) break;  // every remaining candidate set is {itself}: trivial stabilizer

        std::uint64_t orbit = 1;
        const VertexSet cands = st.cand[b];
        for (int y = cands.first(); y >= 0; y = cands.next(y)) {
            if (y == b) continue;
            SearchState child = st;
            if (!engine.assign(child, b, y)) continue;
            if (auto p = engine.find_first(child)) {
                orbit++;
                transversals.push_back(*p);
            }
        }
        gd.chain_orbit_sizes.push_back(orbit);
        gd.order *= orbit;
        if (!engine.assign(st, b, b))
            throw std::logic_error("identity assignment rejected in stabilizer chain");
    }

    gd.generators = thin_generators(transversals, gd.order, n);
    // orbits from the transversal set, which generates the full group
    const auto& gen_set = transversals.empty() ? gd.generators : transversals;
    gd.vertex_orbits = orbits_of_points(n, gen_set);

    auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    std::unordered_map<long long, int> eidx;
    for (int e = 0; e < m; e++)
        eidx[static_cast<long long>(edges[e].first) * kMaxVertices + edges[e].second] = e;
    auto edge_image = [&](const Permutation& p, int e) {
        int a = p(edges[e].first), b2 = p(edges[e].second);
        if (a > b2) std::swap(a, b2);
        return eidx.at(static_cast<long long>(a) * kMaxVertices + b2);
    };
    std::vector<int> orbit_id(m, -1);
    for (int e = 0; e < m; e++) {
        if (orbit_id[e] >= 0) continue;
        int id = static_cast<int>(gd.edge_orbits.size());
        gd.edge_orbits.push_back({});
        std::vector<int> stack{e};
        orbit_id[e] = id;
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            gd.edge_orbits[id].push_back(cur);
            for (const auto& p : gen_set) {
                int img = edge_image(p, cur);
                if (orbit_id[img] < 0) {
                    orbit_id[img] = id;
                    stack.push_back(img);
                }
            }
        }
        std::sort(gd.edge_orbits[id].begin(), gd.edge_orbits[id].end());
    }
    return gd;
}

std::vector<Permutation> h_preserving_group(const LabeledBs& bs) {
    // letter action of the multiplier maps; dihedral index maps fix letters
    static constexpr int kLetterMap[4][6] = {
        {kLetterA, kLetterB, kLetterC, kLetterD, kLetterE, kLetterF},  // k=1
        {kLetterC, kLetterD, kLetterB, kLetterA, kLetterF, kLetterE},  // k=2
        {kLetterB, kLetterA, kLetterD, kLetterC, kLetterE, kLetterF},  // k=4
        {kLetterD, kLetterC, kLetterA, kLetterB, kLetterF, kLetterE},  // k=8
    };
    static constexpr int kMult[4] = {1, 2, 4, 8};

    const int n = bs.graph.vertex_count();
    std::vector<Permutation> out;
    out.reserve(136);
    for (int ki = 0; ki < 4; ki++) {
        for (int eps : {1, -1}) {
            for (int shift = 0; shift < 17; shift++) {
                Permutation p;
                p.to.resize(n);
                for (int v = 0; v < n; v++) {
                    int i = LabeledBs::hset_of(v);  // 1..17
                    int t = LabeledBs::letter_of(v);
                    int j = ((eps * kMult[ki] * i + shift) % 17 + 17) % 17;
                    if (j == 0) j = 17;  // residue 0 written as 17
                    p.to[v] = LabeledBs::index_of(j, kLetterMap[ki][t]);
                }
                out.push_back(std::move(p));
            }
        }
    }
    return out;
}

namespace {

// Lexicographic minimum over the eight relabelings: swap within either edge,
// swap the two edges (transpose of the 2x2 distance matrix).
std::array<int, 4> canonicalize_profile(const std::array<int, 4>& d) {
    auto rowswap = [](std::array<int, 4> t) { return std::array<int, 4>{t[2], t[3], t[0], t[1]}; };
    auto colswap = [](std::array<int, 4> t) { return std::array<int, 4>{t[1], t[0], t[3], t[2]}; };
    auto transp = [](std::array<int, 4> t) { return std::array<int, 4>{t[0], t[2], t[1], t[3]}; };
    std::array<int, 4> best = d;
    for (int mask = 1; mask < 8; mask++) {
        auto t = d;
        if (mask & 1) t = transp(t);
        if (mask & 2) t = colswap(t);
        if (mask & 4) t = rowswap(t);
        best = std::min(best, t);
    }
    return best;
}

}  // namespace

PairProfile pair_profile(const Graph& g, Edge e, Edge f) {
    if (!g.adjacent(e.first, e.second) || !g.adjacent(f.first, f.second))
        throw std::invalid_argument("pair_profile arguments must be edges");
    auto du = bfs_levels(g, e.first).dist;
    auto dv = bfs_levels(g, e.second).dist;
    PairProfile pp;
    pp.d = {du[f.first], du[f.second], dv[f.first], dv[f.second]};
    pp.canonical = canonicalize_profile(pp.d);
    return pp;
}

namespace {

// Partition `count` elements by profile key and by group orbit; every
// profile class must be exactly one orbit.
template <class KeyFn, class ImageFn>
void check_classes_vs_orbits(VerificationReport& rep, const std::string& what, long long count,
                             const std::vector<Permutation>& gens, KeyFn&& key, ImageFn&& image) {
    std::map<std::array<int, 4>, int> class_ids;
    std::vector<int> cls(count);
    for (long long i = 0; i < count; i++) {
        auto k = key(i);
        auto [it, _] = class_ids.try_emplace(k, static_cast<int>(class_ids.size()));
        cls[i] = it->second;
    }
    std::vector<int> orb(count, -1);
    int orbits = 0;
    for (long long i = 0; i < count; i++) {
        if (orb[i] >= 0) continue;
        int id = orbits++;
        std::vector<long long> stack{i};
        orb[i] = id;
        bool mixed = false;
        while (!stack.empty()) {
            long long cur = stack.back();
            stack.pop_back();
            if (cls[cur] != cls[i]) mixed = true;
            for (const auto& p : gens) {
                long long img = image(p, cur);
                if (orb[img] < 0) {
                    orb[img] = id;
                    stack.push_back(img);
                }
            }
        }
        rep.require(!mixed, what + "-orbit-respects-profile", "orbit of element " + std::to_string(i));
    }
    // one orbit per class: orbit count equals class count and no class splits
    std::vector<int> orbit_of_class(class_ids.size(), -1);
    for (long long i = 0; i < count; i++) {
        int& o = orbit_of_class[cls[i]];
        if (o < 0) o = orb[i];
        rep.require(o == orb[i], what + "-single-orbit",
                    "profile class " + std::to_string(cls[i]) + " split across orbits");
    }
    rep.counters[what + "_classes"] = static_cast<std::int64_t>(class_ids.size());
    rep.counters[what + "_orbits"] = orbits;
}

}  // namespace

VerificationReport verify_pair_transitivity(const Graph& g, const GroupDescription& group) {
    VerificationReport rep;
    rep.subject = "edge-pair transitivity";
    const auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    const int n = g.vertex_count();
    DistanceData dd = build_distances(g);

    // ordered edges: index 2e + dir
    auto oe_u = [&](int oe) { return oe & 1 ? edges[oe >> 1].second : edges[oe >> 1].first; };
    auto oe_v = [&](int oe) { return oe & 1 ? edges[oe >> 1].first : edges[oe >> 1].second; };
    std::vector<int> oeidx(static_cast<std::size_t>(n) * n, -1);
    for (int oe = 0; oe < 2 * m; oe++)
        oeidx[static_cast<std::size_t>(oe_u(oe)) * n + oe_v(oe)] = oe;

    const auto& gens = group.generators;

    // Lemma 2.3(2): ordered edge pairs
    check_classes_vs_orbits(
        rep, "edge-pair", static_cast<long long>(2 * m) * (2 * m), gens,
        [&](long long i) {
            int e = static_cast<int>(i / (2 * m)), f = static_cast<int>(i % (2 * m));
            return std::array<int, 4>{dd.dist[oe_u(e)][oe_u(f)], dd.dist[oe_u(e)][oe_v(f)],
                                      dd.dist[oe_v(e)][oe_u(f)], dd.dist[oe_v(e)][oe_v(f)]};
        },
        [&](const Permutation& p, long long i) {
            int e = static_cast<int>(i / (2 * m)), f = static_cast<int>(i % (2 * m));
            long long e2 = oeidx[static_cast<std::size_t>(p(oe_u(e))) * n + p(oe_v(e))];
            long long f2 = oeidx[static_cast<std::size_t>(p(oe_u(f))) * n + p(oe_v(f))];
            return e2 * (2 * m) + f2;
        });

    // Lemma 2.3(1): ordered edge-vertex pairs
    check_classes_vs_orbits(
        rep, "edge-vertex", static_cast<long long>(2 * m) * n, gens,
        [&](long long i) {
            int e = static_cast<int>(i / n), x = static_cast<int>(i % n);
            return std::array<int, 4>{dd.dist[oe_u(e)][x], dd.dist[oe_v(e)][x], 0, 0};
        },
        [&](const Permutation& p, long long i) {
            int e = static_cast<int>(i / n), x = static_cast<int>(i % n);
            long long e2 = oeidx[static_cast<std::size_t>(p(oe_u(e))) * n + p(oe_v(e))];
            return e2 * n + p(x);
        });

    // canonical classes of unordered pairs of distinct edges, counted two ways
    {
        std::set<std::array<int, 4>> canon;
        for (int e = 0; e < m; e++)
            for (int f = e + 1; f < m; f++) {
                std::array<int, 4> d{dd.dist[edges[e].first][edges[f].first],
                                     dd.dist[edges[e].first][edges[f].second],
                                     dd.dist[edges[e].second][edges[f].first],
                                     dd.dist[edges[e].second][edges[f].second]};
                canon.insert(canonicalize_profile(d));
            }
        rep.counters["unordered_pair_classes"] = static_cast<std::int64_t>(canon.size());

        std::unordered_map<long long, int> orb;
        int orbits = 0;
        std::unordered_map<long long, int> eidx;
        for (int e = 0; e < m; e++)
            eidx[static_cast<long long>(edges[e].first) * n + edges[e].second] = e;
        auto eimg = [&](const Permutation& p, int e) {
            int a = p(edges[e].first), b = p(edges[e].second);
            if (a > b) std::swap(a, b);
            return eidx.at(static_cast<long long>(a) * n + b);
        };
        for (int e = 0; e < m; e++) {
            for (int f = e + 1; f < m; f++) {
                long long id = static_cast<long long>(e) * m + f;
                if (orb.count(id)) continue;
                orbits++;
                std::vector<long long> stack{id};
                orb[id] = orbits;
                while (!stack.empty()) {
                    long long cur = stack.back();
                    stack.pop_back();
                    int ce = static_cast<int>(cur / m), cf = static_cast<int>(cur % m);
                    for (const auto& p : gens) {
                        int a = eimg(p, ce), b = eimg(p, cf);
                        if (a > b) std::swap(a, b);
                        long long img = static_cast<long long>(a) * m + b;
                        if (!orb.count(img)) {
                            orb[img] = orbits;
                            stack.push_back(img);
                        }
                    }
                }
            }
        }
        rep.counters["unordered_pair_orbits"] = orbits;
        rep.require(static_cast<std::int64_t>(canon.size()) == orbits, "pair-class-count",
                    "canonical class count != orbit count");
    }
    return rep;
}

std::vector<int> distance_orbit_counts(const Graph& g, const GroupDescription& group) {
    const int n = g.vertex_count();
    DistanceData dd = build_distances(g);
    int diam = dd.nclasses - 2;
    std::vector<int> counts(diam + 1, 0);
    std::vector<int> orb(static_cast<std::size_t>(n) * n, -1);
    for (long long i = 0; i < static_cast<long long>(n) * n; i++) {
        if (orb[i] >= 0) continue;
        int u = static_cast<int>(i / n), v = static_cast<int>(i % n);
        if (dd.dist[u][v] == kUnreach) continue;
        counts[dd.dist[u][v]]++;
        std::vector<long long> stack{i};
        orb[i] = 1;
        while (!stack.empty()) {
            long long cur = stack.back();
            stack.pop_back();
            int a = static_cast<int>(cur / n), b = static_cast<int>(cur % n);
            for (const auto& p : group.generators) {
                long long img = static_cast<long long>(p(a)) * n + p(b);
                if (orb[img] < 0) {
                    orb[img] = 1;
                    stack.push_back(img);
                }
            }
        }
    }
    return counts;
}

}  // namespace bsv
