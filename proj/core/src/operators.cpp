#include "graphlearn/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace graphlearn {

namespace detail {

void degree_apply_into(const Vector& w, int n_nodes, Vector& out) {
  out.setZero(n_nodes);
  const double* wp = w.data();
  double* dp = out.data();
  std::size_t k = 0;
  for (int i = 0; i < n_nodes; ++i) {
    double di = 0.0;
    for (int j = i + 1; j < n_nodes; ++j, ++k) {
      const double wk = wp[k];
      di += wk;
      dp[j] += wk;
    }
    dp[i] += di;
  }
}

void degree_adjoint_into(const Vector& v, int n_nodes, Vector& out) {
  const auto m = static_cast<Eigen::Index>(edge_count(n_nodes));
  out.resize(m);
  const double* vp = v.data();
  double* op = out.data();
  std::size_t k = 0;
  for (int i = 0; i < n_nodes; ++i) {
    const double vi = vp[i];
    for (int j = i + 1; j < n_nodes; ++j, ++k) {
      op[k] = vi + vp[j];
    }
  }
}

}  // namespace detail

DualPoint degree_apply(const EdgeVector& w) {
  Vector d;
  detail::degree_apply_into(w.values(), w.n_nodes(), d);
  return DualPoint(w.n_nodes(), std::move(d));
}

EdgeVector degree_adjoint(const DualPoint& v) {
  Vector out;
  detail::degree_adjoint_into(v.values(), v.n_nodes(), out);
  return EdgeVector(v.n_nodes(), std::move(out));
}

double spectral_norm_S(int n_nodes) {
  if (n_nodes < 2) {
    throw std::invalid_argument("spectral_norm_S: n_nodes must be >= 2, got " +
                                std::to_string(n_nodes));
  }
  return std::sqrt(2.0 * (n_nodes - 1));
}

}  // namespace graphlearn
