#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "graphlearn/solver.hpp"

namespace graphlearn::cli {

// Exit codes shared by the binary and its tests.
enum ExitCode : int {
  kOk = 0,
  kUsageError = 2,
  kIoError = 3,
  kDataError = 4,
  kNumericalError = 5,
};

/// Solver-facing flags common to learn/benchmark/eval. `restart = 0`
/// disables momentum restarts.
struct SolverFlags {
  double alpha = 1.0;
  double beta = 1.0;
  std::string variant = "fdpg";
  int restart = 100;
  int max_iter = 20000;
  double tol = 1e-8;
  std::string init = "zeros";
  std::uint64_t init_seed = 0;
  int trace_stride = 1;

  SolverConfig to_config() const;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(SolverFlags, alpha, beta, variant, restart,
                                                max_iter, tol, init, init_seed, trace_stride)

struct GenGraphOptions {
  std::string model = "er";
  int nodes = 0;
  double p = 0.1;
  std::vector<int> blocks;
  double p_in = 0.3;
  double p_out = 0.05;
  std::uint64_t seed = 0;
  std::string out = "graph.edges";
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(GenGraphOptions, model, nodes, p, blocks, p_in,
                                                p_out, seed, out)

struct GenSignalsOptions {
  std::string graph;
  int signals = 1000;
  double sigma = 0.1;
  std::uint64_t seed = 0;
  std::string out = "signals.csv";
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(GenSignalsOptions, graph, signals, sigma, seed,
                                                out)

struct LearnOptions {
  std::string signals;
  std::string distances;
  double distance_scale = 1.0;
  SolverFlags solver;
  std::string reference;
  std::string out = "learned.edges";
  std::string trace;  // defaults to <out>.trace.csv
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(LearnOptions, signals, distances, distance_scale,
                                                solver, reference, out, trace)

struct BenchmarkOptions {
  std::string signals;
  std::string distances;
  double distance_scale = 1.0;
  double alpha = 1.0;
  double beta = 1.0;
  std::vector<std::string> variants = {"fdpg", "dpg"};
  std::vector<double> targets = {1e-2, 1e-4, 1e-6, 1e-8};
  int restart = 100;
  int max_iter = 20000;
  std::string init = "zeros";
  std::uint64_t init_seed = 0;
  int oracle_max_iter = 100000;
  std::string out = "benchmark";  // output file prefix
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(BenchmarkOptions, signals, distances,
                                                distance_scale, alpha, beta, variants, targets,
                                                restart, max_iter, init, init_seed,
                                                oracle_max_iter, out)

struct EvalOptions {
  std::string learned;
  std::string truth;
  std::string signals;
  std::string distances;
  double distance_scale = 1.0;
  bool grid = false;
  std::vector<double> alphas;  // empty = default grid
  std::vector<double> betas;
  double threshold = 1e-4;
  SolverFlags solver;
  int workers = 0;
  std::string out = "eval.csv";
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(EvalOptions, learned, truth, signals, distances,
                                                distance_scale, grid, alphas, betas, threshold,
                                                solver, workers, out)

struct RerunOptions {
  std::string manifest;
  std::string out_dir;
};

int cmd_gen_graph(const GenGraphOptions& options);
int cmd_gen_signals(const GenSignalsOptions& options);
int cmd_learn(const LearnOptions& options);
int cmd_benchmark(const BenchmarkOptions& options);
int cmd_eval(const EvalOptions& options);
int cmd_rerun(const RerunOptions& options);

}  // namespace graphlearn::cli
