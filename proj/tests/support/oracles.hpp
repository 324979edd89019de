#pragma once

// Independent numerical oracles for the test suites. Everything here
// deliberately avoids the library's closed forms: power iteration instead
// of the spectral formula, golden-section search instead of prox algebra,
// per-coordinate numeric maximization instead of the conjugate
// expressions, dense reconstruction instead of the matrix-free operator.

#include <cmath>
#include <functional>
#include <stdexcept>

#include <Eigen/Dense>

#include "graphlearn/operators.hpp"
#include "graphlearn/solver.hpp"
#include "graphlearn/types.hpp"

namespace oracles {

// Golden-section minimizer of a unimodal function on [lo, hi].
inline double golden_min(const std::function<double(double)>& f, double lo, double hi,
                         int iters = 300) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < iters && b - a > 1e-14 * (1.0 + std::abs(a)); ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return (a + b) / 2.0;
}

// argmin over u > 0 of c_log * (-log u) + (u - x)^2 / 2, the scalar prox
// objective of the scaled negative-log barrier.
inline double prox_neg_log_numeric(double x, double c_log) {
  const double hi = std::max(x, 0.0) + std::sqrt(c_log) + 1.0;
  auto objective = [&](double u) { return -c_log * std::log(u) + 0.5 * (u - x) * (u - x); };
  return golden_min(objective, 1e-12, hi, 400);
}

// Numeric evaluation of F(lambda) = max_{w >= 0} <S^T lambda, w> - f(w) by
// per-coordinate golden-section maximization.
inline double conjugate_F_numeric(const graphlearn::DualPoint& lambda,
                                  const graphlearn::EdgeVector& e, double beta) {
  const graphlearn::EdgeVector c = graphlearn::degree_adjoint(lambda);
  double total = 0.0;
  for (Eigen::Index k = 0; k < c.size(); ++k) {
    const double ck = c.values()[k] - 2.0 * e.values()[k];
    const double hi = std::max(ck, 0.0) / beta + 1.0;
    auto neg_value = [&](double w) { return -(ck * w - beta * w * w); };
    const double w_best = golden_min(neg_value, 0.0, hi, 400);
    total += std::max(0.0, ck * w_best - beta * w_best * w_best);
  }
  return total;
}

// Numeric evaluation of G(lambda) = max_{d > 0} <-lambda, d> - g(d),
// again coordinate by coordinate. Requires lambda > 0.
inline double conjugate_G_numeric(const graphlearn::DualPoint& lambda, double alpha) {
  double total = 0.0;
  for (Eigen::Index i = 0; i < lambda.values().size(); ++i) {
    const double li = lambda.values()[i];
    if (!(li > 0.0)) throw std::invalid_argument("conjugate_G_numeric: lambda must be > 0");
    const double hi = 2.0 * alpha / li + 1.0;
    auto neg_value = [&](double d) { return -(-li * d + alpha * std::log(d)); };
    const double d_best = golden_min(neg_value, 1e-12, hi, 400);
    total += -li * d_best + alpha * std::log(d_best);
  }
  return total;
}

// Power-iteration estimate of ||S||_2 on the matrix-free degree operator.
inline double spectral_norm_power_iteration(int n_nodes, int max_iter = 20000) {
  graphlearn::Vector v(n_nodes);
  // Fixed non-degenerate start, not orthogonal to the dominant eigenvector.
  for (int i = 0; i < n_nodes; ++i) {
    v[i] = 1.0 + 0.5 * std::sin(static_cast<double>(i) + 1.0);
  }
  v.normalize();
  graphlearn::Vector adj, z;
  double rayleigh = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    graphlearn::detail::degree_adjoint_into(v, n_nodes, adj);
    graphlearn::detail::degree_apply_into(adj, n_nodes, z);
    const double next = v.dot(z);
    const double nz = z.norm();
    if (nz == 0.0) return 0.0;
    v = z / nz;
    if (it > 0 && std::abs(next - rayleigh) <= 1e-14 * std::max(1.0, std::abs(next))) {
      rayleigh = next;
      break;
    }
    rayleigh = next;
  }
  return std::sqrt(rayleigh);
}

// Dense squared pairwise row distances by the naive O(N^2 P) double loop.
inline graphlearn::Vector brute_force_distances(const graphlearn::Matrix& X) {
  const auto n = X.rows();
  graphlearn::Vector out(n * (n - 1) / 2);
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j, ++k) {
      double acc = 0.0;
      for (Eigen::Index p = 0; p < X.cols(); ++p) {
        const double d = X(i, p) - X(j, p);
        acc += d * d;
      }
      out[k] = acc;
    }
  }
  return out;
}

// Dense symmetric hollow adjacency built pair by pair in the test itself.
inline graphlearn::Matrix dense_adjacency(const graphlearn::EdgeVector& w) {
  const int n = w.n_nodes();
  graphlearn::Matrix W = graphlearn::Matrix::Zero(n, n);
  Eigen::Index k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++k) {
      W(i, j) = W(j, i) = w.values()[k];
    }
  }
  return W;
}

// Central finite differences of the dual smooth term F.
inline graphlearn::Vector finite_diff_grad_F(const graphlearn::DualPoint& lambda,
                                             const graphlearn::EdgeVector& e, double beta,
                                             double h = 1e-5) {
  const int n = lambda.n_nodes();
  // F alone (not F + G): probes may leave the log domain of G.
  // The closed form used here is itself checked against
  // conjugate_F_numeric before this oracle is trusted.
  auto F = [&](const graphlearn::Vector& l) {
    const graphlearn::EdgeVector adj = graphlearn::degree_adjoint(graphlearn::DualPoint(n, l));
    return (adj.values().array() - 2.0 * e.values().array()).max(0.0).square().sum() /
           (4.0 * beta);
  };
  graphlearn::Vector grad(n);
  graphlearn::Vector probe = lambda.values();
  for (int i = 0; i < n; ++i) {
    const double step = h * std::max(1.0, std::abs(probe[i]));
    const double orig = probe[i];
    probe[i] = orig + step;
    const double fp = F(probe);
    probe[i] = orig - step;
    const double fm = F(probe);
    probe[i] = orig;
    grad[i] = (fp - fm) / (2.0 * step);
  }
  return grad;
}

}  // namespace oracles
