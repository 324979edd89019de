#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "graphlearn/datagen.hpp"
#include "graphlearn/solver.hpp"
#include "graphlearn/types.hpp"

namespace graphlearn {

/// Binarization rule for learned weights: keep entries above
/// relative * max(learned). Relative to the largest weight so the score is
/// invariant to positive rescaling.
struct ThresholdPolicy {
  double relative = 1e-4;
};

struct EvalReport {
  double threshold = 0.0;
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t fn = 0;
  std::int64_t tn = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f_measure = 0.0;
  double alpha = std::numeric_limits<double>::quiet_NaN();
  double beta = std::numeric_limits<double>::quiet_NaN();
  /// Learned graph had no positive weight at all (scored 0, not an error).
  bool all_zero = false;
};

/// Edge-detection score of a learned weighted graph against the truth.
EvalReport f_measure(const EdgeVector& learned, const GroundTruthGraph& truth,
                     ThresholdPolicy policy = {});

struct GridCell {
  double alpha = 0.0;
  double beta = 0.0;
  EvalReport report;
  /// Solver raised a numerical failure for this cell; scored 0 and flagged.
  bool failed = false;
};

struct GridSearchResult {
  GridCell best;
  std::vector<GridCell> table;
};

/// 10 log-spaced points in [1e-1, 1e3]; the default grid for both alpha
/// and beta.
std::vector<double> default_grid();

/// Solve one instance per (alpha, beta), score each by f_measure and return
/// the argmax (ties broken toward larger beta) together with the full
/// table in grid order (alpha-major). Cells are independent and may run on
/// a worker pool; results are merged by grid order regardless of
/// completion order. n_workers = 0 picks the hardware concurrency.
GridSearchResult grid_search(const EdgeVector& e, const GroundTruthGraph& truth,
                             const std::vector<double>& alphas,
                             const std::vector<double>& betas, const SolverConfig& base,
                             ThresholdPolicy policy = {}, int n_workers = 0);

struct TargetHit {
  double target = 0.0;
  /// First iteration with ||w_k - w*|| <= target; nullopt = never reached.
  std::optional<int> iteration;
  /// Solver-loop seconds at that iteration.
  std::optional<double> seconds;
};

struct VariantResult {
  std::string name;
  SolverConfig config;
  ConvergenceTrace trace;
  std::vector<TargetHit> hits;
  double wall_seconds = 0.0;
};

struct BenchmarkResult {
  EdgeVector reference;
  DualPoint reference_lambda;
  double reference_residual = 0.0;
  std::vector<VariantResult> variants;
};

/// Convergence comparison on one instance: computes the reference w* once,
/// then runs every variant against it and records, per target, the first
/// iteration and wall time at which the primal error drops below the
/// target. Targets must be positive and decreasing.
BenchmarkResult benchmark(const EdgeVector& e, double alpha, double beta,
                          const std::vector<SolverConfig>& variants,
                          const std::vector<double>& targets, int oracle_max_iter = 100000);

}  // namespace graphlearn
