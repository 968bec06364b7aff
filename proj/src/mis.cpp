#include "bsv/mis.hpp"

namespace bsv {

namespace {

// Branch and bound over a mutable adjacency copy.  Degree-0/1 vertices are
// taken outright, degree-2 vertices with adjacent neighbours are taken, and
// the remaining degree-2 vertices are folded: v and its neighbours u,w
// contract into one vertex that stands for "u and w together", adding one to
// the count either way.  Folds are undone on backtrack via a row trail and
// replayed in reverse when an incumbent is recorded.
class MisSolver {
  public:
    MisSolver(const Graph& g, std::optional<int> target)
        : g_(g), n_(g.vertex_count()), target_(target) {
        adj_.reserve(n_);
        for (int v = 0; v < n_; v++) adj_.push_back(g.neighbours(v));
    }

    MisResult run(const VertexSet& cand) {
        prime_incumbent(cand);
        if (!stop()) expand(cand, {}, 0);
        MisResult out;
        out.size = best_;
        out.witness = best_set_;
        out.nodes_explored = nodes_;
        out.bound_calls = bound_calls_;
        return out;
    }

  private:
    struct Fold {
        int v, u, w;
    };
    struct RowBackup {
        int v;
        VertexSet row;
    };

    bool stop() const { return target_ && best_ >= *target_; }

    void record(const VertexSet& chosen, int count) {
        if (count <= best_) return;
        VertexSet expanded = chosen;
        for (auto it = folds_.rbegin(); it != folds_.rend(); ++it) {
            if (expanded.test(it->v)) {
                expanded.reset(it->v);
                expanded.set(it->u);
                expanded.set(it->w);
            } else {
                expanded.set(it->v);
            }
        }
        best_ = count;
        best_set_ = expanded;
    }

    // Greedy min-degree independent set seeds the lower bound.
    void prime_incumbent(VertexSet cand) {
        VertexSet chosen;
        int count = 0;
        while (!cand.empty()) {
            int pick = -1, pick_deg = kMaxVertices + 1;
            for (int v = cand.first(); v >= 0; v = cand.next(v)) {
                int d = (adj_[v] & cand).count();
                if (d < pick_deg) {
                    pick_deg = d;
                    pick = v;
                }
            }
            chosen.set(pick);
            count++;
            cand -= adj_[pick];
            cand.reset(pick);
        }
        record(chosen, count);
    }

    // Greedy clique cover of the candidate set (edges extended to triangles
    // when possible); its size is an upper bound on alpha(cand).
    int cover_bound(const VertexSet& cand) {
        bound_calls_++;
        VertexSet rem = cand;
        int cliques = 0;
        for (int v = rem.first(); v >= 0; v = rem.next(v)) {
            rem.reset(v);
            cliques++;
            VertexSet common = adj_[v] & rem;
            int u = common.first();
            if (u < 0) continue;
            rem.reset(u);
            common &= adj_[u];
            int t = common.first();
            if (t >= 0) rem.reset(t);
        }
        return cliques;
    }

    void set_row(int v, const VertexSet& row) {
        trail_.push_back({v, adj_[v]});
        adj_[v] = row;
    }

    void undo_to(std::size_t trail_mark, std::size_t folds_mark) {
        while (trail_.size() > trail_mark) {
            adj_[trail_.back().v] = trail_.back().row;
            trail_.pop_back();
        }
        folds_.resize(folds_mark);
    }

    // Contract {v,u,w} into the slot of v; the caller removes u,w from cand.
    void fold(int v, int u, int w, const VertexSet& cand) {
        VertexSet merged = (adj_[u] | adj_[w]) & cand;
        merged.reset(v);
        merged.reset(u);
        merged.reset(w);
        set_row(v, merged);
        for (int x = merged.first(); x >= 0; x = merged.next(x)) {
            VertexSet row = adj_[x];
            row.set(v);
            set_row(x, row);
        }
        folds_.push_back({v, u, w});
    }

    VertexSet component_of(const VertexSet& cand, int start) const {
        VertexSet comp, frontier;
        comp.set(start);
        frontier.set(start);
        while (!frontier.empty()) {
            VertexSet next;
            for (int v = frontier.first(); v >= 0; v = frontier.next(v)) next |= adj_[v];
            next &= cand;
            next -= comp;
            comp |= next;
            frontier = next;
        }
        return comp;
    }

    // Exact solve of one connected component on the current (folded) graph,
    // as a standalone subproblem with remapped indices.
    MisResult solve_component(const VertexSet& comp) {
        std::vector<int> old_of_new = comp.to_vector();
        std::vector<int> new_of_old(n_, -1);
        for (std::size_t i = 0; i < old_of_new.size(); i++) new_of_old[old_of_new[i]] = static_cast<int>(i);
        Graph sub(static_cast<int>(old_of_new.size()));
        for (int nu = 0; nu < sub.vertex_count(); nu++) {
            VertexSet nb = adj_[old_of_new[nu]] & comp;
            for (int v = nb.first(); v >= 0; v = nb.next(v))
                if (new_of_old[v] > nu) sub.add_edge(nu, new_of_old[v]);
        }
        MisSolver solver(sub, std::nullopt);
        MisResult r = solver.run(VertexSet::full(sub.vertex_count()));
        MisResult out;
        out.size = r.size;
        out.nodes_explored = r.nodes_explored;
        out.bound_calls = r.bound_calls;
        for (int v = r.witness.first(); v >= 0; v = r.witness.next(v))
            out.witness.set(old_of_new[v]);
        return out;
    }

    void expand(VertexSet cand, VertexSet chosen, int count) {
        if (stop()) return;
        nodes_++;
        const std::size_t trail_mark = trail_.size();
        const std::size_t folds_mark = folds_.size();

        // reduction loop: take degree <= 1 and triangle-tip vertices, fold
        // the other degree-2 vertices
        int max_deg = -1, max_v = -1;
        for (int v = cand.first(); v >= 0; v = cand.next(v)) {
            VertexSet nb = adj_[v] & cand;
            int d = nb.count();
            if (d <= 1) {
                chosen.set(v);
                count++;
                cand.reset(v);
                cand -= nb;
            } else if (d == 2) {
                int u = nb.first();
                int w = nb.next(u);
                if (adj_[u].test(w)) {
                    chosen.set(v);
                    count++;
                    cand.reset(v);
                    cand.reset(u);
                    cand.reset(w);
                } else {
                    fold(v, u, w, cand);
                    count++;
                    cand.reset(u);
                    cand.reset(w);
                }
            } else {
                if (d > max_deg) {
                    max_deg = d;
                    max_v = v;
                }
                continue;
            }
            v = -1;  // a reduction fired: rescan from the start
            max_deg = -1;
            max_v = -1;
        }

        if (max_v < 0) {
            record(chosen, count);
            undo_to(trail_mark, folds_mark);
            return;
        }
        if (count + cover_bound(cand) <= best_) {
            undo_to(trail_mark, folds_mark);
            return;
        }

        // disconnected candidates split into independent exact subproblems
        VertexSet comp = component_of(cand, cand.first());
        if (!(comp == cand)) {
            VertexSet rest = cand;
            while (!rest.empty()) {
                VertexSet part = component_of(rest, rest.first());
                rest -= part;
                MisResult sr = solve_component(part);
                nodes_ += sr.nodes_explored;
                bound_calls_ += sr.bound_calls;
                chosen |= sr.witness;
                count += sr.size;
            }
            record(chosen, count);
            undo_to(trail_mark, folds_mark);
            return;
        }

        // branch on the max-degree vertex: include first, then exclude
        VertexSet with_v = cand - adj_[max_v];
        with_v.reset(max_v);
        VertexSet chosen_v = chosen;
        chosen_v.set(max_v);
        expand(with_v, chosen_v, count + 1);
        if (!stop()) {
            cand.reset(max_v);
            expand(cand, chosen, count);
        }
        undo_to(trail_mark, folds_mark);
    }

    const Graph& g_;
    int n_;
    std::optional<int> target_;
    std::vector<VertexSet> adj_;
    std::vector<RowBackup> trail_;
    std::vector<Fold> folds_;
    VertexSet best_set_;
    int best_ = 0;
    std::uint64_t nodes_ = 0;
    std::uint64_t bound_calls_ = 0;
};

}  // namespace

MisResult max_independent_set(const Graph& g) {
    MisSolver solver(g, std::nullopt);
    return solver.run(VertexSet::full(g.vertex_count()));
}

MisResult alpha_avoiding(const Graph& g, const VertexSet& forbidden,
                         std::optional<int> prove_at_least) {
    MisSolver solver(g, prove_at_least);
    return solver.run(VertexSet::full(g.vertex_count()) - forbidden);
}

int brute_force_alpha(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 24) throw std::invalid_argument("brute_force_alpha capped at 24 vertices");
    int best = 0;
    // DFS over vertices, carrying the set of excluded (conflicting) ones.
    auto rec = [&](auto&& self, int v, VertexSet conflicted, int count) -> void {
        if (count + (n - v) <= best) return;
        if (v == n) {
            if (count > best) best = count;
            return;
        }
        if (!conflicted.test(v)) self(self, v + 1, conflicted | g.neighbours(v), count + 1);
        self(self, v + 1, conflicted, count);
    };
    rec(rec, 0, {}, 0);
    return best;
}

bool check_independent(const Graph& g, const VertexSet& s) {
    for (int v = s.first(); v >= 0; v = s.next(v))
        if (g.neighbours(v).intersects(s)) return false;
    return true;
}

}  // namespace bsv
