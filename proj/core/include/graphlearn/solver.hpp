#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "graphlearn/types.hpp"

namespace graphlearn {

enum class Variant { FDPG, DPG };

enum class Init { Zeros, Gaussian };

/// Solver parameters. `validate()` rejects inconsistent settings; in
/// particular beta = 0 is refused because the gradient step uses
/// L = (N-1)/beta.
struct SolverConfig {
  double alpha = 1.0;
  double beta = 1.0;
  Variant variant = Variant::FDPG;
  /// Momentum restart period (FDPG only; ignored for DPG). nullopt
  /// disables restarts, as required when checking the k^2 / k rate bounds.
  std::optional<int> restart_interval = 100;
  int max_iter = 1000;
  /// Stop when ||w_k - w_{k-1}|| / max(1, ||w_k||) <= tol and every degree
  /// of the recovered point is strictly positive (iterates with a zero
  /// degree are plateau artifacts, never the optimum). 0 disables the test
  /// and the run uses all max_iter iterations.
  double tol = 1e-8;
  Init init = Init::Zeros;
  std::uint64_t init_seed = 0;
  /// Record every trace_stride-th iteration (the final one is always kept).
  int trace_stride = 1;

  void validate(int n_nodes) const;
};

struct TraceRecord {
  int k = 0;
  double dual_obj = 0.0;
  /// +inf when the recovered primal point has a zero degree.
  double primal_obj = 0.0;
  /// ||w_k - w_{k-1}||_2 of the recovered primal iterates.
  double step_change = 0.0;
  /// ||w_k - w*||_2 against the caller-supplied reference, when present.
  std::optional<double> err_to_ref;
  /// Seconds of solver-loop time (monotonic clock, excludes setup).
  double elapsed_s = 0.0;
};

struct ConvergenceTrace {
  std::vector<TraceRecord> records;
};

/// Iteration state of the dual solver: current and previous multipliers,
/// extrapolation point, momentum scalar and step constant. t >= 1 always,
/// with t = 1 at initialization and right after a restart; every lambda
/// with k >= 1 is strictly positive element-wise.
struct SolverState {
  Vector lambda;
  Vector lambda_prev;
  Vector omega;
  double t = 1.0;
  int k = 0;
  double L = 0.0;
};

struct SolveResult {
  EdgeVector w;
  DualPoint lambda;
  ConvergenceTrace trace;
  int iterations = 0;
  /// True when the tol test stopped the run before max_iter.
  bool converged = false;
};

/// Gradient Lipschitz constant of the smooth dual term, (N-1)/beta.
double lipschitz_constant(int n_nodes, double beta);

/// max(0, (S^T omega - 2e) / (2 beta)): the conjugate maximizer that feeds
/// both the iteration and the primal recovery.
EdgeVector wbar_update(const DualPoint& omega, const EdgeVector& e, double beta);

/// Element-wise prox of L*g at S wbar - L omega:
/// u = (a + sqrt(a^2 + 4 alpha L)) / 2 with a = S wbar - L omega.
/// Strictly positive for alpha, L > 0.
DualPoint u_update(const EdgeVector& wbar, const DualPoint& omega, double alpha, double L);

/// lambda = omega - (S wbar - u) / L. Strictly positive element-wise.
DualPoint lambda_update(const DualPoint& omega, const EdgeVector& wbar, const DualPoint& u,
                        double L);

/// Momentum recursion t_{k+1} = (1 + sqrt(1 + 4 t_k^2)) / 2.
double momentum_update(double t);

/// omega_{k+1} = lambda_k + ((t_k - 1) / t_{k+1}) (lambda_k - lambda_{k-1}).
DualPoint extrapolate(const DualPoint& lambda, const DualPoint& lambda_prev, double t,
                      double t_next);

/// Primal point recovered from a multiplier, max(0, (S^T lambda - 2e)/(2 beta)).
/// Same map as wbar_update; S w may still contain zero degrees.
EdgeVector primal_from_dual(const DualPoint& lambda, const EdgeVector& e, double beta);

/// Dual objective F(lambda) + G(lambda) with
///   F(lambda) = ||max(0, S^T lambda - 2e)||^2 / (4 beta)
///   G(lambda) = N alpha (log alpha - 1) - alpha sum_i log lambda_i.
/// Returns +inf when some lambda_i <= 0.
double dual_objective(const DualPoint& lambda, const EdgeVector& e, double alpha, double beta);

/// Gradient of F: S applied to the maximizer of the conjugate,
/// S max(0, (S^T lambda - 2e) / (2 beta)).
DualPoint dual_gradient_F(const DualPoint& lambda, const EdgeVector& e, double beta);

/// Stationarity residual max_i |(Sw)_i lambda_i - alpha| / alpha.
/// Zero exactly at the unique primal-dual optimum. Throws for lambda <= 0.
double optimality_residual(const EdgeVector& w, const DualPoint& lambda, double alpha);

/// Run the dual proximal gradient loop (accelerated for FDPG, t == 1 for
/// DPG) on distance data e. When `reference` is given, the trace carries
/// ||w_k - w*||_2 per record. Throws NumericalFailure if an iterate leaves
/// the dual domain or turns non-finite.
SolveResult solve(const EdgeVector& e, const SolverConfig& config,
                  const EdgeVector* reference = nullptr);

struct OracleSolution {
  EdgeVector w;
  DualPoint lambda;
  double residual = 0.0;
  int iterations = 0;
};

/// High-precision reference solution: FDPG with default restarts, tol = 0,
/// a fixed iteration budget, and the final stationarity residual recorded.
/// The optimum is unique, so the starting point only affects convergence.
OracleSolution oracle_solve(const EdgeVector& e, double alpha, double beta,
                            int max_iter = 100000, Init init = Init::Zeros,
                            std::uint64_t init_seed = 0);

}  // namespace graphlearn
