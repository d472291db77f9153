#pragma once

// Shared fixtures, seeded corpora, and the brute-force reference
// implementations the tests check the library against. Everything here is
// deliberately independent of the library's flow/canonical-path machinery:
// reachability is an iterative DFS and separator sizes come from subset
// enumeration.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "msr/generators.hpp"
#include "msr/graph.hpp"

namespace fixtures {

// two disjoint parallel paths; A one step from s, B one step further
inline const char* kFixA =
    "p msr 6 6\n"
    "e 1 2\ne 1 3\ne 2 4\ne 3 5\ne 4 6\ne 5 6\n"
    "s 1\nt 6\nA 2 3\nB 4 5\n";

// cover gadget on a single edge {u,v}: s=1, s_u=2, s_v=3, u=4, v=5,
// t_u=6, t_v=7, t=8
inline const char* kFixB =
    "p msr 8 9\n"
    "e 1 2\ne 1 3\ne 2 4\ne 3 5\ne 4 5\ne 4 6\ne 5 7\ne 6 8\ne 7 8\n"
    "s 1\nt 8\nA 2 3\nB 6 7\n";

// cover gadget on a triangle: s=1, s-column 2..4, middle column 5..7,
// t-column 8..10, t=11
inline const char* kFixC =
    "p msr 11 15\n"
    "e 1 2\ne 1 3\ne 1 4\ne 2 5\ne 3 6\ne 4 7\n"
    "e 5 6\ne 5 7\ne 6 7\n"
    "e 5 8\ne 6 9\ne 7 10\ne 8 11\ne 9 11\ne 10 11\n"
    "s 1\nt 11\nA 2 3 4\nB 8 9 10\n";

// two paths with a pair of crossing edges that block every first move
inline const char* kFixDead =
    "p msr 6 8\n"
    "e 1 2\ne 1 3\ne 2 4\ne 2 5\ne 3 4\ne 3 5\ne 4 6\ne 5 6\n"
    "s 1\nt 6\nA 2 3\nB 4 5\n";

inline msr::Instance fix_a() { return msr::parse_instance(kFixA); }
inline msr::Instance fix_b() { return msr::parse_instance(kFixB); }
inline msr::Instance fix_c() { return msr::parse_instance(kFixC); }
inline msr::Instance fix_dead() { return msr::parse_instance(kFixDead); }

// ---- reference implementations ----

// reachability by iterative DFS, the counterpart the BFS implementation
// is checked against
inline bool dfs_separates(const msr::Graph& g, int s, int t, const std::vector<int>& S) {
    std::vector<char> blocked(g.vertex_count() + 1, 0);
    for (int v : S) blocked[v] = 1;
    std::vector<char> seen(g.vertex_count() + 1, 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (v == t) return false;
        for (int w : g.neighbors(v)) {
            if (seen[w] || blocked[w]) continue;
            seen[w] = 1;
            stack.push_back(w);
        }
    }
    return true;
}

// enumerates size-`size` subsets of the non-terminal vertices and calls fn
// on each; fn returning true stops the walk
template <typename Fn>
inline void for_each_subset(const msr::Graph& g, int s, int t, int size, Fn fn) {
    std::vector<int> cand;
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (v != s && v != t) cand.push_back(v);
    const int c = static_cast<int>(cand.size());
    if (size > c) return;
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    std::vector<int> subset(size);
    for (;;) {
        for (int i = 0; i < size; ++i) subset[i] = cand[pick[i]];
        if (fn(subset)) return;
        int i = size - 1;
        while (i >= 0 && pick[i] == c - size + i) --i;
        if (i < 0) return;
        ++pick[i];
        for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
}

// smallest separating set by subset enumeration ascending by size
inline int brute_min_separator_size(const msr::Graph& g, int s, int t) {
    if (dfs_separates(g, s, t, {})) return 0;
    for (int size = 1; size <= g.vertex_count() - 2; ++size) {
        bool found = false;
        for_each_subset(g, s, t, size, [&](const std::vector<int>& S) {
            if (dfs_separates(g, s, t, S)) {
                found = true;
                return true;
            }
            return false;
        });
        if (found) return size;
    }
    return g.vertex_count() - 2;
}

inline std::vector<std::vector<int>> all_min_separators(const msr::Graph& g, int s, int t) {
    int k = brute_min_separator_size(g, s, t);
    std::vector<std::vector<int>> out;
    for_each_subset(g, s, t, k, [&](const std::vector<int>& S) {
        if (dfs_separates(g, s, t, S)) out.push_back(S);
        return false;
    });
    return out;
}

// ---- corpora ----

// layered instances, tokens at the extreme columns
inline std::vector<msr::Instance> layered_corpus(int count, std::uint32_t seed) {
    std::vector<msr::Instance> out;
    std::uint32_t salt = 0;
    while (static_cast<int>(out.size()) < count) {
        std::uint32_t s = seed + salt++;
        int k = 1 + static_cast<int>(s % 4u);           // 1..4
        int len = 3 + static_cast<int>((s / 4u) % 4u);  // 3..6 vertices per path
        if (k * (len - 2) + 2 > 14) continue;
        double p = 0.15 * static_cast<double>((s / 16u) % 5u);  // 0 .. 0.6
        out.push_back(msr::gen_random_layered(s, k, len, p));
    }
    return out;
}

// layered graphs, but A and B drawn at random from all minimum separators,
// so windows are partial and orientations mix
inline std::vector<msr::Instance> separator_pair_corpus(int count, std::uint32_t seed) {
    std::vector<msr::Instance> out;
    std::mt19937 rng(seed);
    std::uint32_t salt = 1000;
    while (static_cast<int>(out.size()) < count) {
        std::uint32_t s = seed + salt++;
        int k = 2 + static_cast<int>(s % 3u);           // 2..4
        int len = 4 + static_cast<int>((s / 3u) % 3u);  // 4..6
        if (k * (len - 2) + 2 > 14) continue;
        double p = 0.1 + 0.15 * static_cast<double>((s / 9u) % 4u);
        msr::Instance base = msr::gen_random_layered(s, k, len, p);
        auto seps = all_min_separators(base.graph, base.s, base.t);
        if (seps.size() < 2) continue;
        std::uniform_int_distribution<size_t> pick(0, seps.size() - 1);
        auto A = seps[pick(rng)];
        auto B = seps[pick(rng)];
        out.push_back(msr::make_instance(base.graph, base.s, base.t, A, B));
    }
    return out;
}

// Erdos-Renyi graphs with random terminals; exercises off-path vertices
inline std::vector<msr::Instance> er_corpus(int count, std::uint32_t seed) {
    std::vector<msr::Instance> out;
    std::mt19937 rng(seed);
    while (static_cast<int>(out.size()) < count) {
        std::uniform_int_distribution<int> nd(6, 12);
        int n = nd(rng);
        std::uniform_real_distribution<double> pd(0.2, 0.45);
        double p = pd(rng);
        msr::Graph g(n);
        std::uniform_real_distribution<double> coin(0.0, 1.0);
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (coin(rng) < p) g.add_edge(u, v);

        std::uniform_int_distribution<int> vd(1, n);
        int s = vd(rng), t = vd(rng);
        if (s == t || g.has_edge(s, t)) continue;
        if (dfs_separates(g, s, t, {})) continue;  // disconnected pair
        int k = brute_min_separator_size(g, s, t);
        if (k < 1 || k > 4) continue;
        auto seps = all_min_separators(g, s, t);
        if (seps.empty()) continue;
        std::uniform_int_distribution<size_t> pick(0, seps.size() - 1);
        auto A = seps[pick(rng)];
        auto B = seps[pick(rng)];
        out.push_back(msr::make_instance(g, s, t, A, B));
    }
    return out;
}

inline std::vector<msr::Instance> mixed_corpus(int count, std::uint32_t seed) {
    int third = count / 3;
    auto a = layered_corpus(third, seed);
    auto b = separator_pair_corpus(third, seed + 7777);
    auto c = er_corpus(count - 2 * third, seed + 131313);
    std::vector<msr::Instance> out;
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    out.insert(out.end(), c.begin(), c.end());
    return out;
}

// small plain graphs for the gadget corpora
inline msr::PlainGraph complete_graph(int n) {
    msr::PlainGraph g{n, {}};
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) g.edges.emplace_back(u, v);
    return g;
}

inline msr::PlainGraph cycle_graph(int n) {
    msr::PlainGraph g{n, {}};
    for (int v = 1; v < n; ++v) g.edges.emplace_back(v, v + 1);
    if (n > 2) g.edges.emplace_back(n, 1);
    return g;
}

inline msr::PlainGraph random_plain(std::mt19937& rng, int n, double p) {
    msr::PlainGraph g{n, {}};
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (coin(rng) < p) g.edges.emplace_back(u, v);
    return g;
}

inline bool same_edge_set(const msr::Graph& a, const msr::Graph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges() == b.edges();
}

inline bool same_instance(const msr::Instance& a, const msr::Instance& b) {
    return same_edge_set(a.graph, b.graph) && a.s == b.s && a.t == b.t && a.A == b.A && a.B == b.B;
}

}  // namespace fixtures
