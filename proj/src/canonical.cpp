#include "msr/canonical.hpp"

#include <algorithm>
#include <string>

namespace msr {

int CanonicalPaths::path_of(int v) const {
    if (v < 1 || v >= static_cast<int>(path_index_.size())) return -1;
    return path_index_[v];
}

int CanonicalPaths::position_of(int v) const {
    if (v < 1 || v >= static_cast<int>(pos_index_.size())) return 0;
    return pos_index_[v];
}

namespace {

// One maximal-forward pass: from each vertex jump to its farthest neighbor
// ahead on the path. The resulting subsequence is chordless.
std::vector<int> shortcut_path(const Graph& g, const std::vector<int>& path) {
    std::vector<int> out;
    out.push_back(path.front());
    size_t i = 0;
    while (i + 1 < path.size()) {
        size_t next = i + 1;
        for (size_t j = path.size() - 1; j > i + 1; --j) {
            if (g.has_edge(path[i], path[j])) {
                next = j;
                break;
            }
        }
        i = next;
        out.push_back(path[i]);
    }
    return out;
}

}  // namespace

CanonicalPaths canonical_paths(const Instance& inst, const DisjointPaths& dp) {
    CanonicalPaths cp;
    for (const auto& p : dp.paths) cp.paths.push_back(shortcut_path(inst.graph, p));

    int n = inst.graph.vertex_count();
    cp.path_index_.assign(n + 1, -1);
    cp.pos_index_.assign(n + 1, 0);
    for (int i = 0; i < cp.path_count(); ++i) {
        for (int j = 2; j < cp.length(i); ++j) {
            int v = cp.vertex_at(i, j);
            cp.path_index_[v] = i;
            cp.pos_index_[v] = j;
        }
    }

    std::vector<char> in_a(n + 1, 0), in_b(n + 1, 0);
    for (int v : inst.A) in_a[v] = 1;
    for (int v : inst.B) in_b[v] = 1;

    cp.a.assign(cp.path_count(), 0);
    cp.b.assign(cp.path_count(), 0);
    for (int i = 0; i < cp.path_count(); ++i) {
        for (int j = 2; j < cp.length(i); ++j) {
            int v = cp.vertex_at(i, j);
            if (in_a[v]) cp.a[i] = j;
            if (in_b[v]) cp.b[i] = j;
        }
        if (cp.a[i] == 0)
            throw SeparatorOffPath("A misses canonical path " + std::to_string(i + 1));
        if (cp.b[i] == 0)
            throw SeparatorOffPath("B misses canonical path " + std::to_string(i + 1));
    }

    cp.l.resize(cp.path_count());
    cp.r.resize(cp.path_count());
    for (int i = 0; i < cp.path_count(); ++i) {
        cp.l[i] = std::min(cp.a[i], cp.b[i]);
        cp.r[i] = std::max(cp.a[i], cp.b[i]);
    }
    return cp;
}

Configuration locate_tokens(const CanonicalPaths& cp, const std::vector<int>& S) {
    Configuration c;
    c.pos.assign(cp.path_count(), 0);
    for (int v : S) {
        int i = cp.path_of(v);
        if (i < 0)
            throw NotOnePerPath("vertex " + std::to_string(v) + " lies on no canonical path");
        if (c.pos[i] != 0)
            throw NotOnePerPath("two vertices on canonical path " + std::to_string(i + 1));
        c.pos[i] = cp.position_of(v);
    }
    for (int i = 0; i < cp.path_count(); ++i)
        if (c.pos[i] == 0)
            throw NotOnePerPath("canonical path " + std::to_string(i + 1) + " is unhit");
    return c;
}

std::vector<std::pair<int, int>> windows(const CanonicalPaths& cp) {
    std::vector<std::pair<int, int>> w;
    w.reserve(cp.path_count());
    for (int i = 0; i < cp.path_count(); ++i) w.emplace_back(cp.l[i], cp.r[i]);
    return w;
}

}  // namespace msr
