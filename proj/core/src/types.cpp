#include "graphlearn/types.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "graphlearn/errors.hpp"

namespace graphlearn {

EdgeVector::EdgeVector(int n_nodes, Vector values)
    : n_nodes_(n_nodes), values_(std::move(values)) {
  const auto m = edge_count(n_nodes);  // validates n_nodes >= 1
  if (static_cast<std::size_t>(values_.size()) != m) {
    throw std::invalid_argument("EdgeVector: expected length " + std::to_string(m) +
                                " for N=" + std::to_string(n_nodes) + ", got " +
                                std::to_string(values_.size()));
  }
}

EdgeVector EdgeVector::zeros(int n_nodes) {
  return EdgeVector(n_nodes, Vector::Zero(static_cast<Eigen::Index>(edge_count(n_nodes))));
}

EdgeVector EdgeVector::nonnegative(int n_nodes, Vector values) {
  EdgeVector v(n_nodes, std::move(values));
  if ((v.values_.array() < 0.0).any()) {
    throw std::invalid_argument("EdgeVector: negative entry in a nonnegative role");
  }
  return v;
}

DualPoint::DualPoint(int n_nodes, Vector values)
    : n_nodes_(n_nodes), values_(std::move(values)) {
  if (n_nodes < 1) {
    throw std::invalid_argument("DualPoint: n_nodes must be >= 1");
  }
  if (values_.size() != n_nodes) {
    throw std::invalid_argument("DualPoint: expected length " + std::to_string(n_nodes) +
                                ", got " + std::to_string(values_.size()));
  }
}

DualPoint DualPoint::zeros(int n_nodes) {
  return DualPoint(n_nodes, Vector::Zero(n_nodes));
}

SignalMatrix::SignalMatrix(Matrix values) : values_(std::move(values)) {
  if (values_.rows() < 1 || values_.cols() < 1) {
    throw std::invalid_argument("SignalMatrix: need at least one node and one signal");
  }
  if (!values_.allFinite()) {
    throw DataError("SignalMatrix: non-finite entry in signal data");
  }
}

}  // namespace graphlearn
