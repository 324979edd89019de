#pragma once

#include <Eigen/Dense>

#include "graphlearn/edge_index.hpp"

namespace graphlearn {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Length-m vector indexed by node pairs in the canonical (i < j,
/// lexicographic) order. Plain construction accepts any real entries
/// (adjoint images can be negative); the `nonnegative` factory enforces
/// the >= 0 invariant that the edge-weight and distance roles carry.
///
/// Immutable after construction; safe to share across threads.
class EdgeVector {
 public:
  EdgeVector(int n_nodes, Vector values);

  static EdgeVector zeros(int n_nodes);
  static EdgeVector nonnegative(int n_nodes, Vector values);

  int n_nodes() const { return n_nodes_; }
  Eigen::Index size() const { return values_.size(); }
  const Vector& values() const { return values_; }

 private:
  int n_nodes_;
  Vector values_;
};

/// Length-N vector over nodes: multipliers, extrapolation points, degrees.
class DualPoint {
 public:
  DualPoint(int n_nodes, Vector values);

  static DualPoint zeros(int n_nodes);

  int n_nodes() const { return n_nodes_; }
  const Vector& values() const { return values_; }

 private:
  int n_nodes_;
  Vector values_;
};

/// N x P matrix of graph-signal observations; column p is one signal,
/// row i collects the P measurements at node i. Entries must be finite.
class SignalMatrix {
 public:
  explicit SignalMatrix(Matrix values);

  int n_nodes() const { return static_cast<int>(values_.rows()); }
  int n_signals() const { return static_cast<int>(values_.cols()); }
  const Matrix& values() const { return values_; }

 private:
  Matrix values_;
};

}  // namespace graphlearn
