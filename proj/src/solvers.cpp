#include "msr/solvers.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <string>
#include <unordered_map>

#include "msr/separator_check.hpp"

namespace msr {

namespace {

ReconfigSequence lift(ReconfigSequence seq, const std::vector<int>& vertex_map) {
    for (Move& m : seq.moves) {
        m.from_vertex = vertex_map[m.from_vertex];
        m.to_vertex = vertex_map[m.to_vertex];
    }
    return seq;
}

}  // namespace

SolveResult solve_ts_shortest(const Instance& inst) {
    DisjointPaths dp = max_disjoint_paths(inst);
    CanonicalPaths cp = canonical_paths(inst, dp);
    const int k = cp.path_count();

    std::vector<int> pos = cp.a;
    std::vector<int> cur(inst.A);
    auto replace = [&](int from, int to) {
        *std::find(cur.begin(), cur.end(), from) = to;
    };

    SolveResult res;
    ReconfigSequence seq;
    seq.model = Model::slide;
    std::uint64_t checks = 0;

    for (;;) {
        bool done = true;
        for (int i = 0; i < k; ++i) done = done && pos[i] == cp.b[i];
        if (done) break;

        bool moved = false;
        for (int i = 0; i < k && !moved; ++i) {
            if (pos[i] == cp.b[i]) continue;
            int step = cp.b[i] > pos[i] ? 1 : -1;
            int from = cp.vertex_at(i, pos[i]);
            int to = cp.vertex_at(i, pos[i] + step);
            replace(from, to);
            ++checks;
            if (separates(inst.graph, inst.s, inst.t, cur)) {
                seq.moves.push_back({i + 1, pos[i], pos[i] + step, from, to});
                pos[i] += step;
                moved = true;
            } else {
                replace(to, from);
            }
        }
        if (!moved) {
            res.stats.states_explored = checks;
            return res;  // infeasible: no forward slide is ever required to wait
        }
    }
    res.stats.states_explored = checks;
    res.sequence = std::move(seq);
    return res;
}

SolveResult solve_tj_feasible(const Instance& inst) {
    ReducedInstance ri = preprocess_tj(inst);
    const int k = ri.k_reduced;

    SolveResult res;
    ReconfigSequence seq;
    seq.model = Model::jump;
    if (k == 0) {
        res.sequence = std::move(seq);
        return res;
    }

    CrossingEdgeIndex idx(ri.instance, ri.cp);
    Configuration c{ri.cp.a};
    std::uint64_t checks = 0;

    for (;;) {
        bool done = true;
        for (int i = 0; i < k; ++i) done = done && c.pos[i] == ri.cp.b[i];
        if (done) break;

        bool moved = false;
        for (int i = 0; i < k && !moved; ++i) {
            if (c.pos[i] == ri.cp.b[i]) continue;
            int dir = ri.cp.b[i] > c.pos[i] ? 1 : -1;
            int from = c.pos[i];
            for (int landing = ri.cp.b[i]; landing != from; landing -= dir) {
                c.pos[i] = landing;
                ++checks;
                if (idx.separates(c)) {
                    seq.moves.push_back(
                        {i + 1, from, landing, ri.cp.vertex_at(i, from), ri.cp.vertex_at(i, landing)});
                    moved = true;
                    break;
                }
            }
            if (!moved) c.pos[i] = from;
        }
        if (!moved) {
            res.stats.states_explored = checks;
            return res;  // no forward jump anywhere: infeasible
        }
    }
    res.stats.states_explored = checks;
    res.sequence = lift(std::move(seq), ri.vertex_map);
    return res;
}

SolveResult solve_tj_shortest(const Instance& inst, std::uint64_t max_states) {
    ReducedInstance ri = preprocess_tj(inst);
    const int k = ri.k_reduced;

    SolveResult res;
    if (k == 0) {
        res.sequence = ReconfigSequence{Model::jump, {}};
        return res;
    }

    // mixed-radix encoding of positions over the window widths
    std::vector<std::uint64_t> stride(k);
    std::uint64_t states = 1;
    for (int i = 0; i < k; ++i) {
        stride[i] = states;
        std::uint64_t width = static_cast<std::uint64_t>(ri.cp.r[i] - ri.cp.l[i] + 1);
        if (states > max_states / width)
            throw StateSpaceExceeded("configuration space exceeds " + std::to_string(max_states) +
                                     " states");
        states *= width;
    }

    auto encode = [&](const std::vector<int>& pos) {
        std::uint64_t code = 0;
        for (int i = 0; i < k; ++i) code += stride[i] * static_cast<std::uint64_t>(pos[i] - ri.cp.l[i]);
        return code;
    };
    auto decode = [&](std::uint64_t code, std::vector<int>& pos) {
        for (int i = k - 1; i >= 0; --i) {
            pos[i] = static_cast<int>(code / stride[i]) + ri.cp.l[i];
            code %= stride[i];
        }
    };

    CrossingEdgeIndex idx(ri.instance, ri.cp);
    const std::uint64_t start = encode(ri.cp.a);
    const std::uint64_t goal = encode(ri.cp.b);

    std::unordered_map<std::uint64_t, std::uint64_t> parent;
    parent.emplace(start, start);
    std::queue<std::uint64_t> frontier;
    frontier.push(start);
    bool reached = (start == goal);

    std::vector<int> pos(k);
    Configuration c{std::vector<int>(k)};
    while (!frontier.empty() && !reached) {
        std::uint64_t code = frontier.front();
        frontier.pop();
        decode(code, pos);
        c.pos = pos;
        for (int i = 0; i < k && !reached; ++i) {
            int from = pos[i];
            if (from == ri.cp.b[i]) continue;
            int dir = ri.cp.b[i] > from ? 1 : -1;
            for (int landing = from + dir;; landing += dir) {
                c.pos[i] = landing;
                if (idx.separates(c)) {
                    std::uint64_t next = code - stride[i] * static_cast<std::uint64_t>(from - ri.cp.l[i]) +
                                         stride[i] * static_cast<std::uint64_t>(landing - ri.cp.l[i]);
                    if (parent.emplace(next, code).second) {
                        frontier.push(next);
                        if (next == goal) {
                            reached = true;
                            break;
                        }
                    }
                }
                if (landing == ri.cp.b[i]) break;
            }
            c.pos[i] = from;
        }
    }

    res.stats.states_explored = parent.size();
    if (!reached) return res;

    // walk the parent chain back from the goal and diff successive configs
    std::vector<std::uint64_t> chain;
    for (std::uint64_t code = goal;; code = parent.at(code)) {
        chain.push_back(code);
        if (code == start) break;
    }
    std::reverse(chain.begin(), chain.end());

    ReconfigSequence seq;
    seq.model = Model::jump;
    std::vector<int> prev(k), next(k);
    for (size_t step = 1; step < chain.size(); ++step) {
        decode(chain[step - 1], prev);
        decode(chain[step], next);
        for (int i = 0; i < k; ++i) {
            if (prev[i] == next[i]) continue;
            seq.moves.push_back(
                {i + 1, prev[i], next[i], ri.cp.vertex_at(i, prev[i]), ri.cp.vertex_at(i, next[i])});
        }
    }
    res.sequence = lift(std::move(seq), ri.vertex_map);
    return res;
}

namespace {

std::uint64_t binomial_guarded(int n, int k, std::uint64_t cap) {
    if (k < 0 || k > n) return 0;
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
        if (result > cap) return cap + 1;
    }
    return result;
}

std::uint64_t as_mask(const std::vector<int>& S) {
    std::uint64_t m = 0;
    for (int v : S) m |= 1ULL << v;
    return m;
}

}  // namespace

SolveResult oracle_bfs(const Instance& inst, Model model) {
    return oracle_bfs(inst, model, {});
}

SolveResult oracle_bfs(const Instance& inst, Model model, const std::vector<int>& forbidden) {
    const Graph& g = inst.graph;
    const int n = g.vertex_count();
    const int k = inst.k();
    constexpr std::uint64_t kGuard = 1000000;
    if (n >= 63 || binomial_guarded(n - 2, k, kGuard) > kGuard)
        throw TooLarge("subset enumeration beyond the 10^6 guard");

    SolveResult res;
    if (k == 0) {
        res.sequence = ReconfigSequence{model, {}};
        return res;
    }

    std::uint64_t banned = as_mask(forbidden);

    // candidates: every non-terminal vertex
    std::vector<int> cand;
    for (int v = 1; v <= n; ++v)
        if (v != inst.s && v != inst.t) cand.push_back(v);

    // enumerate all size-k subsets and keep the separators
    std::vector<std::uint64_t> seps;
    std::unordered_map<std::uint64_t, int> index;
    std::vector<int> pick(k);
    std::vector<int> subset(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    const int c = static_cast<int>(cand.size());
    if (c >= k) {
        for (;;) {
            for (int i = 0; i < k; ++i) subset[i] = cand[pick[i]];
            std::uint64_t mask = as_mask(subset);
            if ((mask & banned) == 0 && separates(g, inst.s, inst.t, subset)) {
                index.emplace(mask, static_cast<int>(seps.size()));
                seps.push_back(mask);
            }
            int i = k - 1;
            while (i >= 0 && pick[i] == c - k + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }

    std::uint64_t amask = as_mask(inst.A), bmask = as_mask(inst.B);
    auto ait = index.find(amask);
    auto bit = index.find(bmask);
    if (ait == index.end() || bit == index.end()) {
        res.stats.states_explored = seps.size();
        return res;  // start or goal excluded (forbidden); nothing to reach
    }

    // BFS over the reconfiguration graph
    std::vector<int> from(seps.size(), -1);
    std::queue<int> q;
    from[ait->second] = ait->second;
    q.push(ait->second);
    std::uint64_t visited = 1;
    while (!q.empty()) {
        int id = q.front();
        q.pop();
        if (id == bit->second) break;
        std::uint64_t S = seps[id];
        for (int v : cand) {
            if (!(S >> v & 1)) continue;
            for (int u : cand) {
                if (S >> u & 1) continue;
                if (model == Model::slide && !g.has_edge(v, u)) continue;
                std::uint64_t T = (S ^ (1ULL << v)) | (1ULL << u);
                auto it = index.find(T);
                if (it == index.end() || from[it->second] != -1) continue;
                from[it->second] = id;
                ++visited;
                q.push(it->second);
            }
        }
    }

    res.stats.states_explored = visited;
    if (from[bit->second] == -1) return res;

    std::vector<int> chain;
    for (int id = bit->second;; id = from[id]) {
        chain.push_back(id);
        if (id == ait->second) break;
    }
    std::reverse(chain.begin(), chain.end());

    ReconfigSequence seq;
    seq.model = model;
    for (size_t step = 1; step < chain.size(); ++step) {
        std::uint64_t prev = seps[chain[step - 1]], next = seps[chain[step]];
        std::uint64_t gone = prev & ~next, came = next & ~prev;
        Move m;
        m.from_vertex = static_cast<int>(std::countr_zero(gone));
        m.to_vertex = static_cast<int>(std::countr_zero(came));
        seq.moves.push_back(m);
    }
    res.sequence = std::move(seq);
    return res;
}

PathDecomposition pathdecomp_from_solution(const ReducedInstance& ri, const ReconfigSequence& seq) {
    if (seq.model != Model::jump) throw Error("path decomposition expects a jump sequence");
    const CanonicalPaths& cp = ri.cp;
    const int k = cp.path_count();

    std::vector<int> pos = cp.a;
    auto tokens = [&]() {
        std::vector<int> ts;
        for (int i = 0; i < k; ++i) ts.push_back(cp.vertex_at(i, pos[i]));
        std::sort(ts.begin(), ts.end());
        return ts;
    };

    PathDecomposition pd;
    pd.bags.push_back(tokens());
    for (const Move& m : seq.moves) {
        int i = m.path - 1;
        if (i < 0 || i >= k || pos[i] != m.from_pos)
            throw Error("sequence does not replay on this instance");
        int dir = cp.b[i] > cp.a[i] ? 1 : -1;
        if ((m.to_pos - m.from_pos) * dir <= 0)
            throw NotForward("backward jump on path " + std::to_string(m.path));

        std::vector<int> rest;
        for (int j = 0; j < k; ++j)
            if (j != i) rest.push_back(cp.vertex_at(j, pos[j]));

        auto bag_with = [&](std::vector<int> extra) {
            extra.insert(extra.end(), rest.begin(), rest.end());
            std::sort(extra.begin(), extra.end());
            return extra;
        };
        pd.bags.push_back(bag_with({cp.vertex_at(i, m.from_pos)}));
        for (int w = m.from_pos + dir; w != m.to_pos + dir; w += dir)
            pd.bags.push_back(bag_with({cp.vertex_at(i, w - dir), cp.vertex_at(i, w)}));
        pd.bags.push_back(bag_with({cp.vertex_at(i, m.to_pos)}));
        pos[i] = m.to_pos;
    }

    // drop consecutive duplicates (each jump re-emits the current bag)
    auto last = std::unique(pd.bags.begin(), pd.bags.end());
    pd.bags.erase(last, pd.bags.end());
    return pd;
}

}  // namespace msr
