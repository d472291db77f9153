#pragma once

#include <utility>
#include <vector>

namespace msr {

/// Maximum matching in a general undirected graph over 1-based vertices,
/// by augmenting paths with blossom contraction. Returns matched pairs
/// (u, v) with u < v.
std::vector<std::pair<int, int>> maximum_matching(int n, const std::vector<std::pair<int, int>>& edges);

}  // namespace msr
