#include "msr/matching.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace msr {

namespace {

// Classic blossom-contraction matcher, 0-based internally.
struct Matcher {
    int n;
    std::vector<std::vector<int>> g;
    std::vector<int> match, parent, base;
    std::vector<char> used, blossom;

    explicit Matcher(int n_) : n(n_), g(n_), match(n_, -1), parent(n_), base(n_), used(n_), blossom(n_) {}

    int lca(int a, int b) {
        std::vector<char> seen(n, 0);
        for (;;) {
            a = base[a];
            seen[a] = 1;
            if (match[a] == -1) break;
            a = parent[match[a]];
        }
        for (;;) {
            b = base[b];
            if (seen[b]) return b;
            b = parent[match[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            blossom[base[v]] = 1;
            blossom[base[match[v]]] = 1;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    }

    int find_augmenting(int root) {
        std::fill(used.begin(), used.end(), 0);
        std::fill(parent.begin(), parent.end(), -1);
        std::iota(base.begin(), base.end(), 0);
        used[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : g[v]) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
                    int cur = lca(v, to);
                    std::fill(blossom.begin(), blossom.end(), 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n; ++i)
                        if (blossom[base[i]]) {
                            base[i] = cur;
                            if (!used[i]) {
                                used[i] = 1;
                                q.push(i);
                            }
                        }
                } else if (parent[to] == -1) {
                    parent[to] = v;
                    if (match[to] == -1) return to;
                    used[match[to]] = 1;
                    q.push(match[to]);
                }
            }
        }
        return -1;
    }

    void run() {
        for (int v = 0; v < n; ++v) {
            if (match[v] != -1) continue;
            int u = find_augmenting(v);
            while (u != -1) {
                int pu = parent[u], mpu = match[pu];
                match[u] = pu;
                match[pu] = u;
                u = mpu;
            }
        }
    }
};

}  // namespace

std::vector<std::pair<int, int>> maximum_matching(int n, const std::vector<std::pair<int, int>>& edges) {
    Matcher m(n);
    for (auto [u, v] : edges) {
        m.g[u - 1].push_back(v - 1);
        m.g[v - 1].push_back(u - 1);
    }
    m.run();
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < n; ++v)
        if (m.match[v] > v) out.emplace_back(v + 1, m.match[v] + 1);
    return out;
}

}  // namespace msr
