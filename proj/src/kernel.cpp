#include "msr/kernel.hpp"

#include <algorithm>

#include "msr/matching.hpp"
#include "msr/separator_check.hpp"

namespace msr {

KernelOutcome kernelize(const Instance& inst, int budget) {
    if (budget < 0) throw Error("budget must be nonnegative");
    KernelOutcome out;
    out.budget = budget;

    ReducedInstance ri = preprocess_tj(inst);

    if (ri.k_reduced == 0) {
        out.kind = KernelOutcome::Kind::decided_yes;
        out.reason = "A equals B after preprocessing";
        return out;
    }
    if (ri.k_reduced > budget) {
        out.kind = KernelOutcome::Kind::decided_no;
        out.reason = "every token must jump at least once and there are more tokens than jumps";
        return out;
    }

    // a token cannot cross a long stretch of skippable vertices in few jumps
    const long long path_cap = 4LL * (budget + 1) * (budget + 1) + 4;
    for (int i = 0; i < ri.cp.path_count(); ++i) {
        if (ri.cp.length(i) > path_cap) {
            out.kind = KernelOutcome::Kind::decided_no;
            out.reason = "a canonical path is longer than " + std::to_string(budget) + " jumps admit";
            return out;
        }
    }

    const long long short_cap = 4LL * budget + 4;
    const long long long_total_cap = 2LL * (2 * budget + 2) * (2 * budget + 2) + 2 * budget + 2;
    long long long_total = 0;
    for (int i = 0; i < ri.cp.path_count(); ++i)
        if (ri.cp.length(i) > short_cap) long_total += ri.cp.length(i);
    if (long_total > long_total_cap) {
        out.kind = KernelOutcome::Kind::decided_no;
        out.reason = "the long canonical paths hold more vertices than the budget admits";
        return out;
    }

    // each unskippable vertex costs one jump landing of its own
    std::vector<int> ug = unskippable_vertices(ri);
    if (static_cast<int>(ug.size()) > budget) {
        out.kind = KernelOutcome::Kind::decided_no;
        out.reason = "more unskippable vertices than jumps";
        return out;
    }

    // matching among the crossing edges between skippable non-token
    // vertices: every matched edge needs a jump onto one of its endpoints
    std::vector<char> excluded(ri.instance.graph.vertex_count() + 1, 0);
    for (int v : ug) excluded[v] = 1;
    for (int v : ri.instance.A) excluded[v] = 1;
    for (int v : ri.instance.B) excluded[v] = 1;
    CrossingEdgeIndex idx(ri.instance, ri.cp);
    std::vector<std::pair<int, int>> gamma_edges;
    for (const CrossingEdge& e : idx.edges())
        if (!excluded[e.va] && !excluded[e.vb])
            gamma_edges.emplace_back(std::min(e.va, e.vb), std::max(e.va, e.vb));
    auto matching = maximum_matching(ri.instance.graph.vertex_count(), gamma_edges);
    if (static_cast<int>(matching.size()) > budget) {
        out.kind = KernelOutcome::Kind::decided_no;
        out.reason = "a matching of unskippable crossing edges exceeds the budget";
        return out;
    }

    const long long vcap = 8LL * budget * budget + 5LL * budget;
    const long long ecap = 12LL * budget * budget + 7LL * budget;
    if (ri.instance.graph.vertex_count() > vcap || ri.instance.graph.edge_count() > ecap)
        throw Error("kernel size bound violated");  // unreachable when the rules above hold

    out.kind = KernelOutcome::Kind::kernel;
    out.kernel = std::move(ri);
    return out;
}

}  // namespace msr
