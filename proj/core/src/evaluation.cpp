#include "graphlearn/evaluation.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <utility>

#include "graphlearn/errors.hpp"

namespace graphlearn {

EvalReport f_measure(const EdgeVector& learned, const GroundTruthGraph& truth,
                     ThresholdPolicy policy) {
  if (learned.n_nodes() != truth.edges.n_nodes()) {
    throw std::invalid_argument("f_measure: node count mismatch");
  }
  if (!(policy.relative > 0.0)) {
    throw std::invalid_argument("f_measure: threshold must be > 0");
  }

  EvalReport report;
  const double w_max = learned.values().maxCoeff();
  report.all_zero = !(w_max > 0.0);
  report.threshold = report.all_zero ? 0.0 : policy.relative * w_max;

  for (Eigen::Index k = 0; k < learned.size(); ++k) {
    const bool predicted = !report.all_zero && learned.values()[k] > report.threshold;
    const bool actual = truth.edges.values()[k] > 0.0;
    if (predicted && actual) ++report.tp;
    else if (predicted && !actual) ++report.fp;
    else if (!predicted && actual) ++report.fn;
    else ++report.tn;
  }

  const auto ratio = [](std::int64_t num, std::int64_t den) {
    return den > 0 ? static_cast<double>(num) / static_cast<double>(den) : 0.0;
  };
  report.precision = ratio(report.tp, report.tp + report.fp);
  report.recall = ratio(report.tp, report.tp + report.fn);
  const double pr = report.precision + report.recall;
  report.f_measure = pr > 0.0 ? 2.0 * report.precision * report.recall / pr : 0.0;
  return report;
}

std::vector<double> default_grid() {
  std::vector<double> grid(10);
  for (int i = 0; i < 10; ++i) {
    grid[i] = std::pow(10.0, -1.0 + 4.0 * i / 9.0);
  }
  return grid;
}

GridSearchResult grid_search(const EdgeVector& e, const GroundTruthGraph& truth,
                             const std::vector<double>& alphas,
                             const std::vector<double>& betas, const SolverConfig& base,
                             ThresholdPolicy policy, int n_workers) {
  if (alphas.empty() || betas.empty()) {
    throw std::invalid_argument("grid_search: grids must be nonempty");
  }
  for (double a : alphas) {
    if (!(a > 0.0)) throw std::invalid_argument("grid_search: alphas must be > 0");
  }
  for (double b : betas) {
    if (!(b > 0.0)) throw std::invalid_argument("grid_search: betas must be > 0");
  }

  const std::size_t n_cells = alphas.size() * betas.size();
  std::vector<GridCell> table(n_cells);

  auto run_cell = [&](std::size_t idx) {
    GridCell& cell = table[idx];
    cell.alpha = alphas[idx / betas.size()];
    cell.beta = betas[idx % betas.size()];
    SolverConfig config = base;
    config.alpha = cell.alpha;
    config.beta = cell.beta;
    try {
      SolveResult solved = solve(e, config);
      cell.report = f_measure(solved.w, truth, policy);
    } catch (const NumericalFailure&) {
      cell.failed = true;
      cell.report = EvalReport{};
      cell.report.all_zero = true;
    }
    cell.report.alpha = cell.alpha;
    cell.report.beta = cell.beta;
  };

  std::size_t workers = n_workers > 0 ? static_cast<std::size_t>(n_workers)
                                      : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, n_cells);
  if (workers <= 1) {
    for (std::size_t idx = 0; idx < n_cells; ++idx) run_cell(idx);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t idx = next.fetch_add(1); idx < n_cells; idx = next.fetch_add(1)) {
          run_cell(idx);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  // Argmax scan in grid order; ties go to the larger beta.
  GridSearchResult result;
  result.table = std::move(table);
  const GridCell* best = &result.table.front();
  for (const GridCell& cell : result.table) {
    if (cell.report.f_measure > best->report.f_measure ||
        (cell.report.f_measure == best->report.f_measure && cell.beta > best->beta)) {
      best = &cell;
    }
  }
  result.best = *best;
  return result;
}

BenchmarkResult benchmark(const EdgeVector& e, double alpha, double beta,
                          const std::vector<SolverConfig>& variants,
                          const std::vector<double>& targets, int oracle_max_iter) {
  if (variants.empty()) {
    throw std::invalid_argument("benchmark: need at least one variant");
  }
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (!(targets[i] > 0.0)) {
      throw std::invalid_argument("benchmark: targets must be positive");
    }
    if (i > 0 && targets[i] >= targets[i - 1]) {
      throw std::invalid_argument("benchmark: targets must be strictly decreasing");
    }
  }

  OracleSolution oracle = oracle_solve(e, alpha, beta, oracle_max_iter);
  BenchmarkResult result{std::move(oracle.w), std::move(oracle.lambda), oracle.residual, {}};
  result.variants.reserve(variants.size());

  for (const SolverConfig& variant : variants) {
    SolverConfig config = variant;
    config.alpha = alpha;
    config.beta = beta;
    config.trace_stride = 1;  // target hits need the error at every iteration

    VariantResult vr;
    vr.name = config.variant == Variant::FDPG ? "fdpg" : "dpg";
    vr.config = config;
    SolveResult solved = solve(e, config, &result.reference);
    vr.trace = std::move(solved.trace);
    vr.wall_seconds = vr.trace.records.empty() ? 0.0 : vr.trace.records.back().elapsed_s;

    vr.hits.reserve(targets.size());
    for (double target : targets) {
      TargetHit hit;
      hit.target = target;
      for (const TraceRecord& rec : vr.trace.records) {
        if (rec.err_to_ref && *rec.err_to_ref <= target) {
          hit.iteration = rec.k;
          hit.seconds = rec.elapsed_s;
          break;
        }
      }
      vr.hits.push_back(hit);
    }
    result.variants.push_back(std::move(vr));
  }
  return result;
}

}  // namespace graphlearn
