#pragma once

#include <utility>
#include <vector>

#include "msr/preprocess.hpp"

namespace msr {

/// An edge joining the interiors of two distinct canonical paths,
/// stored with both endpoint positions.
struct CrossingEdge {
    int path_a;
    int pos_a;
    int path_b;
    int pos_b;
    int va;
    int vb;
};

/// All crossing edges of a reduced instance. On reduced instances a
/// configuration separates iff it blocks every single-crossing s-t-path,
/// which this index tests in O(#crossing edges). This is the hot loop of
/// the exact solver.
class CrossingEdgeIndex {
public:
    CrossingEdgeIndex() = default;

    /// Requires a reduced instance: every vertex on a chordless canonical
    /// path. Throws Error otherwise.
    CrossingEdgeIndex(const Instance& inst, const CanonicalPaths& cp);

    const std::vector<CrossingEdge>& edges() const { return edges_; }

    /// True iff no crossing edge opens an s-t-path for this configuration:
    /// edge (p on P_i, q on P_j) opens one iff p > pos[i] and q < pos[j].
    bool separates(const Configuration& c) const;

private:
    std::vector<CrossingEdge> edges_;
};

/// Convenience wrapper building the index per call; equals
/// is_separator on the reduced graph.
bool is_config_separator(const ReducedInstance& ri, const Configuration& c);

/// Vertices outside A, B, {s,t} with at least two neighbors on a single
/// foreign canonical path. Every reconfiguration sequence must place a
/// token on each of them. (Sufficient condition, not a characterization.)
std::vector<int> unskippable_vertices(const ReducedInstance& ri);

/// Crossing edges with both endpoints outside A, B, {s,t}; every sequence
/// must place a token on at least one endpoint of each.
std::vector<std::pair<int, int>> unskippable_edges(const ReducedInstance& ri);

}  // namespace msr
