#include "graphlearn/edge_index.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace graphlearn {

namespace {

// Index of the first pair with left endpoint i.
std::size_t row_offset(int i, int n_nodes) {
  const auto n = static_cast<std::size_t>(n_nodes);
  const auto ii = static_cast<std::size_t>(i);
  return ii * n - ii * (ii + 1) / 2;
}

}  // namespace

std::size_t edge_count(int n_nodes) {
  if (n_nodes < 1) {
    throw std::invalid_argument("edge_count: n_nodes must be >= 1, got " +
                                std::to_string(n_nodes));
  }
  const auto n = static_cast<std::size_t>(n_nodes);
  return n * (n - 1) / 2;
}

std::size_t edge_index(int i, int j, int n_nodes) {
  if (i < 0 || j >= n_nodes || i >= j) {
    throw std::invalid_argument("edge_index: need 0 <= i < j < N, got i=" +
                                std::to_string(i) + " j=" + std::to_string(j) +
                                " N=" + std::to_string(n_nodes));
  }
  return row_offset(i, n_nodes) + static_cast<std::size_t>(j - i - 1);
}

std::pair<int, int> edge_endpoints(std::size_t index, int n_nodes) {
  const std::size_t m = edge_count(n_nodes);
  if (index >= m) {
    throw std::invalid_argument("edge_endpoints: index " + std::to_string(index) +
                                " out of range for N=" + std::to_string(n_nodes));
  }
  // Closed-form guess for the left endpoint, then fix up any floating-point
  // off-by-one against the exact row offsets.
  const double rem = static_cast<double>(m - 1 - index);
  int i = n_nodes - 2 - static_cast<int>(std::floor((std::sqrt(8.0 * rem + 1.0) - 1.0) / 2.0));
  if (i < 0) i = 0;
  while (i > 0 && row_offset(i, n_nodes) > index) --i;
  while (row_offset(i + 1, n_nodes) <= index) ++i;
  const int j = i + 1 + static_cast<int>(index - row_offset(i, n_nodes));
  return {i, j};
}

}  // namespace graphlearn
