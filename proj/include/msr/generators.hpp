#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "msr/graph.hpp"

namespace msr {

/// A bare input graph for the gadget constructions (vertex-cover side),
/// distinct from Instance.
struct PlainGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;
};

/// Edge-file format: `<n>` on the first line, then one `u v` pair per line.
PlainGraph parse_plain_graph(const std::string& text);

struct GeneratedInstance {
    Instance instance;
    int ell = 0;  // jump budget the construction targets
};

/// Per input vertex v: a private path s, s_v, v, t_v, t; the input edges
/// connect the middle column. Start tokens on the s_v column, goals on the
/// t_v column; budget |V| + kappa. The shortest jump count of the result
/// is |V| plus the minimum vertex cover size of g.
GeneratedInstance gen_vc_gadget(const PlainGraph& g, int kappa);

/// Chains r cover instances (same vertex count mu and same kappa each,
/// else MismatchedSizes) along mu+1 paths of 4r+1 vertices: each input is
/// embedded on its own column, with a complete bipartite synchronization
/// gadget between consecutive embeddings that forces the tokens to cross
/// the columns in lockstep. Budget r(k + kappa) with k = mu + 1.
GeneratedInstance gen_cross_composition(const std::vector<PlainGraph>& inputs,
                                        const std::vector<int>& kappas);

/// k disjoint s-t-paths of path_len vertices; every inter-path vertex pair
/// on adjacent columns gains a crossing edge with the given probability.
/// Tokens start on column 2 and target column path_len-1. Seeded and
/// reproducible; regenerates (up to 100 attempts) should validation fail.
Instance gen_random_layered(std::uint32_t seed, int k, int path_len, double crossing_prob);

/// Minimum vertex cover size by exhaustive subset search; guarded by
/// |V| <= 20 (throws TooLarge).
int brute_vc(const PlainGraph& g);

}  // namespace msr
