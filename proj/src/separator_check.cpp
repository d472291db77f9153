#include "msr/separator_check.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace msr {

CrossingEdgeIndex::CrossingEdgeIndex(const Instance& inst, const CanonicalPaths& cp) {
    for (auto [u, v] : inst.graph.edges()) {
        bool u_term = (u == inst.s || u == inst.t);
        bool v_term = (v == inst.s || v == inst.t);
        if (u_term && v_term) throw Error("terminals are adjacent");
        if (u_term || v_term) {
            int w = u_term ? v : u;
            int pos = cp.position_of(w);
            bool at_s = (u == inst.s || v == inst.s);
            if (cp.path_of(w) < 0 || (at_s ? pos != 2 : pos != cp.length(cp.path_of(w)) - 1))
                throw Error("terminal edge off the canonical paths; instance is not reduced");
            continue;  // path edge
        }
        int pu = cp.path_of(u), pv = cp.path_of(v);
        if (pu < 0 || pv < 0)
            throw Error("vertex off the canonical paths; instance is not reduced");
        if (pu == pv) {
            if (std::abs(cp.position_of(u) - cp.position_of(v)) != 1)
                throw Error("chord on a canonical path; instance is not reduced");
            continue;  // path edge
        }
        edges_.push_back({pu, cp.position_of(u), pv, cp.position_of(v), u, v});
    }
}

bool CrossingEdgeIndex::separates(const Configuration& c) const {
    for (const CrossingEdge& e : edges_) {
        if (e.pos_a > c.pos[e.path_a] && e.pos_b < c.pos[e.path_b]) return false;
        if (e.pos_b > c.pos[e.path_b] && e.pos_a < c.pos[e.path_a]) return false;
    }
    return true;
}

bool is_config_separator(const ReducedInstance& ri, const Configuration& c) {
    return CrossingEdgeIndex(ri.instance, ri.cp).separates(c);
}

namespace {

std::vector<char> token_or_terminal_flags(const ReducedInstance& ri) {
    std::vector<char> skip(ri.instance.graph.vertex_count() + 1, 0);
    skip[ri.instance.s] = skip[ri.instance.t] = 1;
    for (int v : ri.instance.A) skip[v] = 1;
    for (int v : ri.instance.B) skip[v] = 1;
    return skip;
}

}  // namespace

std::vector<int> unskippable_vertices(const ReducedInstance& ri) {
    auto skip = token_or_terminal_flags(ri);
    std::vector<int> out;
    for (int v = 1; v <= ri.instance.graph.vertex_count(); ++v) {
        if (skip[v] || ri.cp.path_of(v) < 0) continue;
        std::map<int, int> per_path;
        for (int w : ri.instance.graph.neighbors(v)) {
            int p = ri.cp.path_of(w);
            if (p >= 0 && p != ri.cp.path_of(v)) ++per_path[p];
        }
        for (auto [p, cnt] : per_path)
            if (cnt >= 2) {
                out.push_back(v);
                break;
            }
    }
    return out;
}

std::vector<std::pair<int, int>> unskippable_edges(const ReducedInstance& ri) {
    auto skip = token_or_terminal_flags(ri);
    CrossingEdgeIndex idx(ri.instance, ri.cp);
    std::vector<std::pair<int, int>> out;
    for (const CrossingEdge& e : idx.edges()) {
        if (skip[e.va] || skip[e.vb]) continue;
        out.emplace_back(std::min(e.va, e.vb), std::max(e.va, e.vb));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace msr
