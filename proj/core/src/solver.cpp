#include "graphlearn/solver.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "graphlearn/errors.hpp"
#include "graphlearn/operators.hpp"
#include "graphlearn/rng.hpp"

namespace graphlearn {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Vector initial_lambda(int n_nodes, const SolverConfig& config) {
  if (config.init == Init::Zeros) {
    return Vector::Zero(n_nodes);
  }
  Rng rng(config.init_seed, Rng::Stream::SolverInit);
  Vector lambda(n_nodes);
  for (int i = 0; i < n_nodes; ++i) {
    lambda[i] = rng.normal();
  }
  return lambda;
}

// w = max(0, (S^T v - 2e) / (2 beta)), with adj scratch for S^T v.
void recover_primal_into(const Vector& v, const Vector& e, double beta, int n_nodes,
                         Vector& adj, Vector& w) {
  detail::degree_adjoint_into(v, n_nodes, adj);
  w = ((adj.array() - 2.0 * e.array()) / (2.0 * beta)).max(0.0);
}

double primal_value(const Vector& w, const Vector& e, double alpha, double beta, int n_nodes,
                    Vector& deg) {
  detail::degree_apply_into(w, n_nodes, deg);
  if ((deg.array() <= 0.0).any()) {
    return kInf;
  }
  return 2.0 * w.dot(e) + beta * w.squaredNorm() - alpha * deg.array().log().sum();
}

}  // namespace

void SolverConfig::validate(int n_nodes) const {
  if (n_nodes < 2) {
    throw std::invalid_argument("SolverConfig: need at least 2 nodes");
  }
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("SolverConfig: alpha must be > 0");
  }
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw std::invalid_argument(
        "SolverConfig: beta must be > 0; the dual step size uses L = (N-1)/beta, "
        "which is undefined at beta = 0");
  }
  if (max_iter < 1) {
    throw std::invalid_argument("SolverConfig: max_iter must be >= 1");
  }
  if (!(tol >= 0.0) || !std::isfinite(tol)) {
    throw std::invalid_argument("SolverConfig: tol must be finite and >= 0");
  }
  if (restart_interval && *restart_interval < 1) {
    throw std::invalid_argument("SolverConfig: restart_interval must be >= 1");
  }
  if (trace_stride < 1) {
    throw std::invalid_argument("SolverConfig: trace_stride must be >= 1");
  }
}

double lipschitz_constant(int n_nodes, double beta) {
  if (n_nodes < 2) {
    throw std::invalid_argument("lipschitz_constant: n_nodes must be >= 2");
  }
  if (!(beta > 0.0)) {
    throw std::invalid_argument("lipschitz_constant: beta must be > 0");
  }
  return static_cast<double>(n_nodes - 1) / beta;
}

EdgeVector wbar_update(const DualPoint& omega, const EdgeVector& e, double beta) {
  if (omega.n_nodes() != e.n_nodes()) {
    throw std::invalid_argument("wbar_update: node count mismatch");
  }
  Vector adj, w;
  recover_primal_into(omega.values(), e.values(), beta, e.n_nodes(), adj, w);
  return EdgeVector(e.n_nodes(), std::move(w));
}

DualPoint u_update(const EdgeVector& wbar, const DualPoint& omega, double alpha, double L) {
  if (wbar.n_nodes() != omega.n_nodes()) {
    throw std::invalid_argument("u_update: node count mismatch");
  }
  if (!(alpha > 0.0) || !(L > 0.0)) {
    throw std::invalid_argument("u_update: alpha and L must be > 0");
  }
  Vector swbar;
  detail::degree_apply_into(wbar.values(), wbar.n_nodes(), swbar);
  const Eigen::ArrayXd a = swbar.array() - L * omega.values().array();
  Vector u = ((a + (a.square() + 4.0 * alpha * L).sqrt()) / 2.0).matrix();
  return DualPoint(omega.n_nodes(), std::move(u));
}

DualPoint lambda_update(const DualPoint& omega, const EdgeVector& wbar, const DualPoint& u,
                        double L) {
  if (omega.n_nodes() != wbar.n_nodes() || omega.n_nodes() != u.n_nodes()) {
    throw std::invalid_argument("lambda_update: node count mismatch");
  }
  Vector swbar;
  detail::degree_apply_into(wbar.values(), wbar.n_nodes(), swbar);
  Vector lambda = omega.values() - (swbar - u.values()) / L;
  return DualPoint(omega.n_nodes(), std::move(lambda));
}

double momentum_update(double t) {
  if (!(t >= 1.0)) {
    throw std::invalid_argument("momentum_update: t must be >= 1");
  }
  return (1.0 + std::sqrt(1.0 + 4.0 * t * t)) / 2.0;
}

DualPoint extrapolate(const DualPoint& lambda, const DualPoint& lambda_prev, double t,
                      double t_next) {
  if (lambda.n_nodes() != lambda_prev.n_nodes()) {
    throw std::invalid_argument("extrapolate: node count mismatch");
  }
  if (!(t >= 1.0) || !(t_next >= t)) {
    throw std::invalid_argument("extrapolate: need t_next >= t >= 1");
  }
  if (t == 1.0) {
    return lambda;
  }
  const double c = (t - 1.0) / t_next;
  Vector omega = lambda.values() + c * (lambda.values() - lambda_prev.values());
  return DualPoint(lambda.n_nodes(), std::move(omega));
}

EdgeVector primal_from_dual(const DualPoint& lambda, const EdgeVector& e, double beta) {
  // Same map as wbar_update, evaluated at the multiplier instead of the
  // extrapolation point.
  return wbar_update(lambda, e, beta);
}

double dual_objective(const DualPoint& lambda, const EdgeVector& e, double alpha, double beta) {
  if (lambda.n_nodes() != e.n_nodes()) {
    throw std::invalid_argument("dual_objective: node count mismatch");
  }
  if (!(alpha > 0.0) || !(beta > 0.0)) {
    throw std::invalid_argument("dual_objective: alpha and beta must be > 0");
  }
  if ((lambda.values().array() <= 0.0).any()) {
    return kInf;
  }
  Vector adj;
  detail::degree_adjoint_into(lambda.values(), lambda.n_nodes(), adj);
  const double F = (adj.array() - 2.0 * e.values().array()).max(0.0).square().sum() / (4.0 * beta);
  const int n = lambda.n_nodes();
  const double G = n * alpha * (std::log(alpha) - 1.0) -
                   alpha * lambda.values().array().log().sum();
  return F + G;
}

DualPoint dual_gradient_F(const DualPoint& lambda, const EdgeVector& e, double beta) {
  EdgeVector maximizer = wbar_update(lambda, e, beta);
  return degree_apply(maximizer);
}

double optimality_residual(const EdgeVector& w, const DualPoint& lambda, double alpha) {
  if (w.n_nodes() != lambda.n_nodes()) {
    throw std::invalid_argument("optimality_residual: node count mismatch");
  }
  if (!(alpha > 0.0)) {
    throw std::invalid_argument("optimality_residual: alpha must be > 0");
  }
  if ((lambda.values().array() <= 0.0).any()) {
    throw std::invalid_argument("optimality_residual: lambda must be strictly positive");
  }
  Vector deg;
  detail::degree_apply_into(w.values(), w.n_nodes(), deg);
  return ((deg.array() * lambda.values().array()) - alpha).abs().maxCoeff() / alpha;
}

SolveResult solve(const EdgeVector& e, const SolverConfig& config, const EdgeVector* reference) {
  const int n = e.n_nodes();
  config.validate(n);
  if ((e.values().array() < 0.0).any()) {
    throw std::invalid_argument("solve: distance vector must be nonnegative");
  }
  if (reference && reference->n_nodes() != n) {
    throw std::invalid_argument("solve: reference node count mismatch");
  }

  const double alpha = config.alpha;
  const double beta = config.beta;
  const double L = lipschitz_constant(n, beta);
  const Vector& ev = e.values();
  const bool accelerated = config.variant == Variant::FDPG;
  const bool restarts = accelerated && config.restart_interval.has_value();

  SolverState st;
  st.lambda = initial_lambda(n, config);
  st.lambda_prev = st.lambda;
  st.omega = st.lambda;
  st.t = 1.0;
  st.L = L;

  // Scratch buffers reused by every iteration.
  Vector adj, swbar, lambda_next(n), deg;
  Vector wbar(e.size()), w_curr(e.size()), w_prev(e.size());
  recover_primal_into(st.lambda, ev, beta, n, adj, w_prev);

  ConvergenceTrace trace;
  trace.records.reserve(static_cast<std::size_t>(config.max_iter / config.trace_stride) + 2);

  int iterations = 0;
  bool converged = false;
  const auto t_start = std::chrono::steady_clock::now();

  for (int k = 1; k <= config.max_iter; ++k) {
    iterations = k;
    st.k = k;

    // Eq.-style update sweep: conjugate maximizer, prox in the degree
    // domain, multiplier step, momentum, extrapolation.
    detail::degree_adjoint_into(st.omega, n, adj);
    wbar = ((adj.array() - 2.0 * ev.array()) / (2.0 * beta)).max(0.0);
    detail::degree_apply_into(wbar, n, swbar);
    const auto a = swbar.array() - L * st.omega.array();
    lambda_next = st.omega.array() - (swbar.array() -
                  (a + (a.square() + 4.0 * alpha * L).sqrt()) / 2.0) / L;

    if (!lambda_next.allFinite()) {
      throw NumericalFailure("solve: non-finite dual iterate", k);
    }
    if ((lambda_next.array() <= 0.0).any()) {
      throw NumericalFailure("solve: dual iterate left the positive orthant", k);
    }

    const double t_next = accelerated ? momentum_update(st.t) : 1.0;
    const double c = (st.t - 1.0) / t_next;
    st.omega = lambda_next.array() + c * (lambda_next.array() - st.lambda.array());
    st.lambda_prev.swap(st.lambda);
    st.lambda.swap(lambda_next);
    st.t = t_next;

    if (restarts && k % *config.restart_interval == 0) {
      st.t = 1.0;
      st.omega = st.lambda;
    }

    const bool record = k % config.trace_stride == 0 || k == config.max_iter;
    const bool record_next = (k + 1) % config.trace_stride == 0 || k + 1 == config.max_iter;
    // w_k is needed for the stopping rule, at record points, and one
    // iteration ahead of a record point so step_change stays an exact
    // consecutive difference.
    const bool need_w = config.tol > 0.0 || record || record_next;

    double step_change = 0.0;
    bool stop = false;
    if (need_w) {
      recover_primal_into(st.lambda, ev, beta, n, adj, w_curr);
      step_change = (w_curr - w_prev).norm();
      if (config.tol > 0.0 && step_change <= config.tol * std::max(1.0, w_curr.norm())) {
        // The optimum always has strictly positive degrees (log barrier), so
        // a candidate stop with a zero degree is an early plateau, not
        // convergence; momentum restarts in particular produce near-frozen
        // primal iterates for a few iterations.
        detail::degree_apply_into(w_curr, n, deg);
        stop = (deg.array() > 0.0).all();
      }
    }

    if (record || stop) {
      TraceRecord rec;
      rec.k = k;
      // adj still holds S^T lambda_k: reuse it for the dual value.
      const double F =
          (adj.array() - 2.0 * ev.array()).max(0.0).square().sum() / (4.0 * beta);
      rec.dual_obj = F + n * alpha * (std::log(alpha) - 1.0) -
                     alpha * st.lambda.array().log().sum();
      rec.primal_obj = primal_value(w_curr, ev, alpha, beta, n, deg);
      rec.step_change = step_change;
      if (reference) {
        rec.err_to_ref = (w_curr - reference->values()).norm();
      }
      rec.elapsed_s =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
      trace.records.push_back(rec);
    }

    if (need_w) {
      w_prev.swap(w_curr);
    }
    if (stop) {
      converged = true;
      break;
    }
  }

  // w_prev holds the most recent recovered primal point.
  return SolveResult{EdgeVector(n, std::move(w_prev)),
                     DualPoint(n, std::move(st.lambda)),
                     std::move(trace), iterations, converged};
}

OracleSolution oracle_solve(const EdgeVector& e, double alpha, double beta, int max_iter,
                            Init init, std::uint64_t init_seed) {
  SolverConfig config;
  config.alpha = alpha;
  config.beta = beta;
  config.variant = Variant::FDPG;
  // Badly scaled instances stall under short restart periods.
  config.restart_interval = 1000;
  config.max_iter = max_iter;
  config.tol = 0.0;
  config.init = init;
  config.init_seed = init_seed;
  config.trace_stride = max_iter;  // keep only the final record
  SolveResult result = solve(e, config);
  const double residual = optimality_residual(result.w, result.lambda, alpha);
  return OracleSolution{std::move(result.w), std::move(result.lambda), residual,
                        result.iterations};
}

}  // namespace graphlearn
