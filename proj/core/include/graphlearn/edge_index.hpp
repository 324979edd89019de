#pragma once

#include <cstddef>
#include <utility>

namespace graphlearn {

// Canonical edge ordering used across the whole library: all node pairs
// (i, j) with i < j, sorted lexicographically by (i, j), zero-based.
// Every length-m vector over edges (weights, distances) follows it.

/// Number of unordered node pairs, m = N(N-1)/2.
std::size_t edge_count(int n_nodes);

/// Position of pair (i, j), i < j, in the canonical ordering.
/// Throws std::invalid_argument unless 0 <= i < j < n_nodes.
std::size_t edge_index(int i, int j, int n_nodes);

/// Inverse of edge_index: the pair stored at `index`.
/// Throws std::invalid_argument if index >= edge_count(n_nodes).
std::pair<int, int> edge_endpoints(std::size_t index, int n_nodes);

}  // namespace graphlearn
