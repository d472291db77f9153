#pragma once

#include <string>
#include <utility>
#include <vector>

#include "msr/errors.hpp"

namespace msr {

/// Simple undirected graph over dense 1-based vertex ids.
///
/// Adjacency lists are kept sorted ascending, so iteration order (and
/// everything derived from it, like flow paths) is deterministic.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    bool has_vertex(int v) const { return v >= 1 && v <= n_; }

    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;

    /// Inserts {u,v}; rejects self-loops, duplicates, and out-of-range ids.
    void add_edge(int u, int v);

    /// All edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;  // adj_[0] unused
};

/// A reconfiguration instance: graph, non-adjacent terminals, and two
/// equal-size minimum s-t-separators A (start) and B (goal).
struct Instance {
    Graph graph;
    int s = 0;
    int t = 0;
    std::vector<int> A;  // sorted ascending
    std::vector<int> B;  // sorted ascending

    int k() const { return static_cast<int>(A.size()); }
};

/// Pairwise internally disjoint s-t-paths; each path runs s ... t.
struct DisjointPaths {
    std::vector<std::vector<int>> paths;
    int count() const { return static_cast<int>(paths.size()); }
};

/// True iff removing S leaves no s-t-path (breadth-first reachability).
bool separates(const Graph& g, int s, int t, const std::vector<int>& S);

/// Validating constructor shared by the parser and the generators.
/// Checks terminal non-adjacency, that A and B separate, and that both
/// match the max-flow value, i.e. are minimum.
Instance make_instance(Graph graph, int s, int t, std::vector<int> A, std::vector<int> B);

/// Reads the line-oriented instance format (see README). Sections appear
/// in the fixed order p, e*, s, t, A, B; `#` starts a comment line.
Instance parse_instance(const std::string& text);

/// Serializes an instance in canonical form (sorted edge list).
std::string format_instance(const Instance& inst);

/// True iff no s-t-path exists in G - S. Throws InvalidSet if S touches
/// s or t.
bool is_separator(const Instance& inst, const std::vector<int>& S);

/// Maximum set of pairwise internally disjoint s-t-paths, via unit-capacity
/// max-flow on the vertex-split digraph (augmenting-path method). The flow
/// decomposition breaks ties toward the smallest vertex id, so the returned
/// paths are canonical for a given graph.
DisjointPaths disjoint_paths(const Graph& g, int s, int t);
DisjointPaths max_disjoint_paths(const Instance& inst);

int min_separator_size(const Instance& inst);

}  // namespace msr
