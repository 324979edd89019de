#include "graphlearn/objective.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "graphlearn/operators.hpp"

namespace graphlearn {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

Matrix adjacency_dense(const EdgeVector& w) {
  const int n = w.n_nodes();
  Matrix W = Matrix::Zero(n, n);
  std::size_t k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++k) {
      W(i, j) = w.values()[static_cast<Eigen::Index>(k)];
      W(j, i) = W(i, j);
    }
  }
  return W;
}

Matrix laplacian_dense(const EdgeVector& w) {
  Matrix L = -adjacency_dense(w);
  L.diagonal() = -L.rowwise().sum();
  return L;
}

EdgeVector distance_vector(const SignalMatrix& X) {
  const int n = X.n_nodes();
  const Matrix gram = X.values() * X.values().transpose();
  Vector e(static_cast<Eigen::Index>(edge_count(n)));
  std::size_t k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++k) {
      const double d = gram(i, i) + gram(j, j) - 2.0 * gram(i, j);
      e[static_cast<Eigen::Index>(k)] = d > 0.0 ? d : 0.0;
    }
  }
  return EdgeVector::nonnegative(n, std::move(e));
}

double total_variation(const SignalMatrix& X, const EdgeVector& w) {
  if (X.n_nodes() != w.n_nodes()) {
    throw std::invalid_argument("total_variation: node count mismatch");
  }
  const Matrix L = laplacian_dense(w);
  return (X.values().transpose() * L * X.values()).trace();
}

double primal_objective(const EdgeVector& w, const EdgeVector& e, double alpha, double beta) {
  if (w.n_nodes() != e.n_nodes()) {
    throw std::invalid_argument("primal_objective: node count mismatch");
  }
  if (alpha <= 0.0 || beta <= 0.0) {
    throw std::invalid_argument("primal_objective: alpha and beta must be > 0");
  }
  if ((w.values().array() < 0.0).any()) {
    return kInf;
  }
  Vector d;
  detail::degree_apply_into(w.values(), w.n_nodes(), d);
  if ((d.array() <= 0.0).any()) {
    return kInf;
  }
  return 2.0 * w.values().dot(e.values()) + beta * w.values().squaredNorm() -
         alpha * d.array().log().sum();
}

}  // namespace graphlearn
