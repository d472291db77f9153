#include "msr/preprocess.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace msr {

namespace {

// Mutable copy of an instance that keeps the input vertex ids while rules
// delete vertices and edges, then renumbers densely on materialize().
struct Workspace {
    int n;
    int s, t;
    std::vector<std::set<int>> adj;
    std::vector<char> alive;
    bool changed = false;

    explicit Workspace(const Instance& inst)
        : n(inst.graph.vertex_count()), s(inst.s), t(inst.t), adj(n + 1), alive(n + 1, 1) {
        alive[0] = 0;
        for (auto [u, v] : inst.graph.edges()) {
            adj[u].insert(v);
            adj[v].insert(u);
        }
    }

    int degree(int v) const { return static_cast<int>(adj[v].size()); }

    void drop_vertex(int v) {
        for (int w : adj[v]) adj[w].erase(v);
        adj[v].clear();
        alive[v] = 0;
        changed = true;
    }

    void drop_edge(int u, int v) {
        adj[u].erase(v);
        adj[v].erase(u);
        changed = true;
    }

    bool link(int u, int v) {
        if (u == v || adj[u].count(v)) return false;
        adj[u].insert(v);
        adj[v].insert(u);
        changed = true;
        return true;
    }

    bool has_edge(int u, int v) const { return adj[u].count(v) > 0; }

    // Renumbers survivors in ascending id order and revalidates the result.
    Reduction materialize(const std::vector<int>& A, const std::vector<int>& B) const {
        std::vector<int> to_new(n + 1, 0), to_old;
        to_old.push_back(0);
        for (int v = 1; v <= n; ++v)
            if (alive[v]) {
                to_new[v] = static_cast<int>(to_old.size());
                to_old.push_back(v);
            }
        Graph g(static_cast<int>(to_old.size()) - 1);
        for (int v = 1; v <= n; ++v)
            for (int w : adj[v])
                if (v < w) g.add_edge(to_new[v], to_new[w]);
        auto relabel = [&](const std::vector<int>& S) {
            std::vector<int> out;
            for (int v : S)
                if (alive[v]) out.push_back(to_new[v]);
            return out;
        };
        Reduction red;
        red.instance = make_instance(std::move(g), to_new[s], to_new[t], relabel(A), relabel(B));
        red.vertex_map = std::move(to_old);
        red.changed = changed;
        return red;
    }
};

// Farthest-forward shortcut pass over an arbitrary adjacency oracle.
template <typename HasEdge>
std::vector<int> shortcut_with(const std::vector<int>& path, HasEdge has_edge) {
    std::vector<int> out;
    out.push_back(path.front());
    size_t i = 0;
    while (i + 1 < path.size()) {
        size_t next = i + 1;
        for (size_t j = path.size() - 1; j > i + 1; --j)
            if (has_edge(path[i], path[j])) {
                next = j;
                break;
            }
        i = next;
        out.push_back(path[i]);
    }
    return out;
}

}  // namespace

Reduction trim_to_windows(const Instance& inst, const CanonicalPaths& cp) {
    Workspace ws(inst);
    for (int i = 0; i < cp.path_count(); ++i) {
        for (int j = 2; j < cp.length(i); ++j)
            if (j < cp.l[i] || j > cp.r[i]) ws.drop_vertex(cp.vertex_at(i, j));
        ws.link(inst.s, cp.vertex_at(i, cp.l[i]));
        ws.link(cp.vertex_at(i, cp.r[i]), inst.t);
    }
    return ws.materialize(inst.A, inst.B);
}

Reduction contract_offpath(const Instance& inst, const CanonicalPaths& cp) {
    Workspace ws(inst);
    auto paths = cp.paths;

    for (;;) {
        std::vector<char> on_path(ws.n + 1, 0);
        for (const auto& p : paths)
            for (int v : p) on_path[v] = 1;

        // connect path vertices joined through off-path components, then
        // delete those components
        std::vector<char> visited(ws.n + 1, 0);
        bool contracted = false;
        for (int v = 1; v <= ws.n; ++v) {
            if (!ws.alive[v] || on_path[v] || visited[v]) continue;
            std::vector<int> component;
            std::set<int> boundary;
            std::queue<int> q;
            q.push(v);
            visited[v] = 1;
            while (!q.empty()) {
                int x = q.front();
                q.pop();
                component.push_back(x);
                for (int w : ws.adj[x]) {
                    if (on_path[w]) {
                        boundary.insert(w);
                    } else if (!visited[w]) {
                        visited[w] = 1;
                        q.push(w);
                    }
                }
            }
            for (auto it = boundary.begin(); it != boundary.end(); ++it)
                for (auto jt = std::next(it); jt != boundary.end(); ++jt) ws.link(*it, *jt);
            for (int x : component) ws.drop_vertex(x);
            contracted = true;
        }

        // the new edges may be chords; shortcut and go around again
        bool shortened = false;
        for (auto& p : paths) {
            auto q = shortcut_with(p, [&](int a, int b) { return ws.has_edge(a, b); });
            if (q.size() != p.size()) {
                p = std::move(q);
                shortened = true;
            }
        }
        if (!contracted && !shortened) break;
    }
    return ws.materialize(inst.A, inst.B);
}

Reduction reduce_degrees(const Instance& inst, const CanonicalPaths& cp) {
    Workspace ws(inst);
    auto paths = cp.paths;
    std::vector<char> keep(ws.n + 1, 0);
    keep[inst.s] = keep[inst.t] = 1;
    for (int v : inst.A) keep[v] = 1;
    for (int v : inst.B) keep[v] = 1;

    for (;;) {
        bool fired = false;

        // interior positions under the current (possibly spliced) paths
        std::vector<int> path_of(ws.n + 1, -1), pos_of(ws.n + 1, 0);
        for (size_t i = 0; i < paths.size(); ++i)
            for (size_t j = 1; j + 1 < paths[i].size(); ++j) {
                path_of[paths[i][j]] = static_cast<int>(i);
                pos_of[paths[i][j]] = static_cast<int>(j) + 1;
            }

        // a vertex keeps only its extreme neighbors on each foreign path
        for (int v = 1; v <= ws.n; ++v) {
            if (!ws.alive[v] || path_of[v] < 0) continue;
            std::map<int, std::vector<int>> per_path;
            for (int w : ws.adj[v])
                if (path_of[w] >= 0 && path_of[w] != path_of[v]) per_path[path_of[w]].push_back(w);
            for (auto& [fp, verts] : per_path) {
                if (verts.size() < 3) continue;
                std::sort(verts.begin(), verts.end(),
                          [&](int x, int y) { return pos_of[x] < pos_of[y]; });
                for (size_t m = 1; m + 1 < verts.size(); ++m) ws.drop_edge(v, verts[m]);
                fired = true;
            }
        }

        // splice out interior degree-2 vertices, keeping tokens and terminals
        for (auto& p : paths) {
            for (size_t j = 1; j + 1 < p.size();) {
                int v = p[j];
                if (!keep[v] && ws.degree(v) == 2) {
                    int prev = p[j - 1], next = p[j + 1];
                    ws.drop_vertex(v);
                    ws.link(prev, next);
                    p.erase(p.begin() + static_cast<long>(j));
                    fired = true;
                } else {
                    ++j;
                }
            }
        }

        if (!fired) break;
    }
    return ws.materialize(inst.A, inst.B);
}

SharedRemoval remove_shared(const Instance& inst) {
    std::vector<int> shared;
    std::set_intersection(inst.A.begin(), inst.A.end(), inst.B.begin(), inst.B.end(),
                          std::back_inserter(shared));
    Workspace ws(inst);
    for (int v : shared) ws.drop_vertex(v);
    Reduction red = ws.materialize(inst.A, inst.B);
    SharedRemoval out;
    out.instance = std::move(red.instance);
    out.vertex_map = std::move(red.vertex_map);
    out.fixed_tokens = std::move(shared);
    out.changed = red.changed;
    return out;
}

namespace {

// total[new] = total_prev[step[new]]
std::vector<int> compose(const std::vector<int>& total_prev, const std::vector<int>& step) {
    std::vector<int> total(step.size(), 0);
    for (size_t v = 1; v < step.size(); ++v) total[v] = total_prev[step[v]];
    return total;
}

}  // namespace

ReducedInstance preprocess_tj(const Instance& inst) {
    std::vector<int> total(inst.graph.vertex_count() + 1);
    for (size_t v = 0; v < total.size(); ++v) total[v] = static_cast<int>(v);

    SharedRemoval sr = remove_shared(inst);
    Instance cur = std::move(sr.instance);
    total = compose(total, sr.vertex_map);

    if (cur.k() == 0) {
        // every token is fixed; the leftover problem is a trivial yes-instance
        Graph g(2);
        ReducedInstance out;
        out.instance = make_instance(std::move(g), 1, 2, {}, {});
        out.cp = canonical_paths(out.instance, DisjointPaths{});
        out.vertex_map = {0, total[cur.s], total[cur.t]};
        out.fixed_tokens = std::move(sr.fixed_tokens);
        out.k_reduced = 0;
        return out;
    }

    for (;;) {
        DisjointPaths dp = max_disjoint_paths(cur);
        CanonicalPaths cp = canonical_paths(cur, dp);

        Reduction red = trim_to_windows(cur, cp);
        if (!red.changed) red = contract_offpath(cur, cp);
        if (!red.changed) red = reduce_degrees(cur, cp);
        if (!red.changed) {
            ReducedInstance out;
            out.instance = std::move(cur);
            out.cp = std::move(cp);
            out.vertex_map = std::move(total);
            out.fixed_tokens = std::move(sr.fixed_tokens);
            out.k_reduced = out.instance.k();
            return out;
        }
        total = compose(total, red.vertex_map);
        cur = std::move(red.instance);
    }
}

}  // namespace msr
