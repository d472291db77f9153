#pragma once

#include <utility>
#include <vector>

#include "msr/graph.hpp"

namespace msr {

/// A fixed set of k chordless pairwise internally disjoint s-t-paths,
/// together with the token start/goal positions on each path.
///
/// Positions are 1-based along each path with s at 1 and t at L(i).
/// Every minimum separator meets each path in exactly one vertex, so a
/// separator is equivalently a vector of positions (see Configuration).
struct CanonicalPaths {
    std::vector<std::vector<int>> paths;
    std::vector<int> a;  // token start position on path i (vertex of A)
    std::vector<int> b;  // token goal position on path i (vertex of B)
    std::vector<int> l;  // min(a[i], b[i])
    std::vector<int> r;  // max(a[i], b[i])

    int path_count() const { return static_cast<int>(paths.size()); }
    int length(int path) const { return static_cast<int>(paths[path].size()); }
    int vertex_at(int path, int pos) const { return paths[path][pos - 1]; }

    /// 0-based path index of an interior vertex, -1 for s, t, and
    /// off-path vertices (terminals lie on every path).
    int path_of(int v) const;
    /// 1-based position of an interior vertex, 0 when not interior.
    int position_of(int v) const;

    std::vector<int> path_index_;  // by vertex id
    std::vector<int> pos_index_;
};

/// Token locations, one position per canonical path.
struct Configuration {
    std::vector<int> pos;
};

/// Shortcuts every path of dp along chords until chordless, then locates
/// the A and B vertices on the resulting paths. Throws SeparatorOffPath
/// if a vertex of A or B ends up on no path; for valid instances this
/// cannot happen, since minimum separators meet every chordless path.
CanonicalPaths canonical_paths(const Instance& inst, const DisjointPaths& dp);

/// Positions of the vertices of S, one per path. Throws NotOnePerPath if
/// S misses a path or hits one twice (then S is not a minimum separator).
Configuration locate_tokens(const CanonicalPaths& cp, const std::vector<int>& S);

/// The movement window (l_i, r_i) of each token.
std::vector<std::pair<int, int>> windows(const CanonicalPaths& cp);

}  // namespace msr
