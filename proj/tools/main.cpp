#include <cstdio>
#include <exception>
#include <stdexcept>

#include <CLI11.hpp>

#include "graphlearn/commands.hpp"
#include "graphlearn/errors.hpp"
#include "graphlearn/io.hpp"
#include "graphlearn/manifest.hpp"

using namespace graphlearn;
using namespace graphlearn::cli;

namespace {

void add_solver_flags(CLI::App* cmd, SolverFlags& flags) {
  cmd->add_option("--alpha", flags.alpha, "Log-barrier weight on the degrees (> 0)");
  cmd->add_option("--beta", flags.beta,
                  "Squared-norm weight (> 0; sets the dual step via L = (N-1)/beta)");
  cmd->add_option("--variant", flags.variant, "Solver variant: fdpg (accelerated) or dpg");
  cmd->add_option("--restart", flags.restart,
                  "Momentum restart interval in iterations; 0 disables (fdpg only)");
  cmd->add_option("--max-iter", flags.max_iter, "Iteration cap");
  cmd->add_option("--tol", flags.tol, "Relative primal-change stopping tolerance; 0 disables");
  cmd->add_option("--init", flags.init, "Dual initialization: zeros or gaussian");
  cmd->add_option("--init-seed", flags.init_seed, "Seed for the gaussian initialization");
  cmd->add_option("--trace-stride", flags.trace_stride, "Record every k-th iteration");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graphlearn: learn undirected weighted graphs from smooth signals"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read option defaults from a TOML/INI file");
  app.set_version_flag("--version", std::string(kToolVersion));

  GenGraphOptions gen_graph;
  auto* cmd_gg = app.add_subcommand("gen-graph", "Draw a ground-truth random graph");
  cmd_gg->add_option("--model", gen_graph.model, "er or sbm")->required();
  cmd_gg->add_option("--nodes", gen_graph.nodes, "Node count (er)");
  cmd_gg->add_option("--p", gen_graph.p, "Edge probability (er)");
  cmd_gg->add_option("--blocks", gen_graph.blocks, "Comma-separated block sizes (sbm)")
      ->delimiter(',');
  cmd_gg->add_option("--p-in", gen_graph.p_in, "Within-block edge probability (sbm)");
  cmd_gg->add_option("--p-out", gen_graph.p_out, "Cross-block edge probability (sbm)");
  cmd_gg->add_option("--seed", gen_graph.seed, "Graph-stream seed");
  cmd_gg->add_option("--out,-o", gen_graph.out, "Output edge-list path");

  GenSignalsOptions gen_signals;
  auto* cmd_gs = app.add_subcommand("gen-signals", "Sample smooth signals on a graph");
  cmd_gs->add_option("--graph", gen_signals.graph, "Ground-truth edge list")->required();
  cmd_gs->add_option("--signals", gen_signals.signals, "Number of signals P");
  cmd_gs->add_option("--sigma", gen_signals.sigma, "Noise level sigma_e (>= 0)");
  cmd_gs->add_option("--seed", gen_signals.seed, "Signal-stream seed");
  cmd_gs->add_option("--out,-o", gen_signals.out, "Output CSV path");

  LearnOptions learn;
  auto* cmd_l = app.add_subcommand("learn", "Learn a graph from signals or distances");
  cmd_l->add_option("--signals", learn.signals, "Signal CSV (N rows, P columns)");
  cmd_l->add_option("--distances", learn.distances, "Precomputed distance edge list");
  cmd_l->add_option("--distance-scale", learn.distance_scale,
                    "Multiply distances by this factor (experimentation only)");
  add_solver_flags(cmd_l, learn.solver);
  cmd_l->add_option("--reference", learn.reference,
                    "Reference edge list; adds the err_to_ref trace column");
  cmd_l->add_option("--out,-o", learn.out, "Learned edge-list path");
  cmd_l->add_option("--trace", learn.trace, "Trace CSV path (default <out>.trace.csv)");

  BenchmarkOptions bench;
  auto* cmd_b = app.add_subcommand("benchmark", "Compare solver variants against an oracle");
  cmd_b->add_option("--signals", bench.signals, "Signal CSV");
  cmd_b->add_option("--distances", bench.distances, "Precomputed distance edge list");
  cmd_b->add_option("--distance-scale", bench.distance_scale, "Distance scaling factor");
  cmd_b->add_option("--alpha", bench.alpha, "Log-barrier weight");
  cmd_b->add_option("--beta", bench.beta, "Squared-norm weight");
  cmd_b->add_option("--variants", bench.variants, "Comma-separated: fdpg,dpg")->delimiter(',');
  cmd_b->add_option("--targets", bench.targets,
                    "Comma-separated decreasing primal-error targets")->delimiter(',');
  cmd_b->add_option("--restart", bench.restart, "FDPG restart interval; 0 disables");
  cmd_b->add_option("--max-iter", bench.max_iter, "Iteration cap per variant");
  cmd_b->add_option("--init", bench.init, "zeros or gaussian");
  cmd_b->add_option("--init-seed", bench.init_seed, "Gaussian init seed");
  cmd_b->add_option("--oracle-max-iter", bench.oracle_max_iter,
                    "Iteration budget for the reference solution");
  cmd_b->add_option("--out,-o", bench.out, "Output file prefix");

  EvalOptions eval;
  auto* cmd_e = app.add_subcommand("eval", "Score a learned graph or run a 2-D grid search");
  cmd_e->add_option("--learned", eval.learned, "Learned edge list (report mode)");
  cmd_e->add_option("--truth", eval.truth, "Ground-truth edge list")->required();
  cmd_e->add_flag("--grid", eval.grid, "Grid-search mode over (alpha, beta)");
  cmd_e->add_option("--signals", eval.signals, "Signal CSV (grid mode)");
  cmd_e->add_option("--distances", eval.distances, "Distance edge list (grid mode)");
  cmd_e->add_option("--distance-scale", eval.distance_scale, "Distance scaling factor");
  cmd_e->add_option("--alphas", eval.alphas, "Comma-separated alpha grid (default log grid)")
      ->delimiter(',');
  cmd_e->add_option("--betas", eval.betas, "Comma-separated beta grid (default log grid)")
      ->delimiter(',');
  cmd_e->add_option("--threshold", eval.threshold, "Relative binarization threshold");
  add_solver_flags(cmd_e, eval.solver);
  cmd_e->add_option("--workers", eval.workers, "Grid worker pool size; 0 = hardware");
  cmd_e->add_option("--out,-o", eval.out, "Report/table CSV path");

  RerunOptions rerun;
  auto* cmd_r = app.add_subcommand("rerun", "Re-execute a run from its manifest");
  cmd_r->add_option("--manifest", rerun.manifest, "Manifest JSON path")->required();
  cmd_r->add_option("--out-dir", rerun.out_dir, "Redirect outputs into this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (cmd_gg->parsed()) return cmd_gen_graph(gen_graph);
    if (cmd_gs->parsed()) return cmd_gen_signals(gen_signals);
    if (cmd_l->parsed()) return cmd_learn(learn);
    if (cmd_b->parsed()) return cmd_benchmark(bench);
    if (cmd_e->parsed()) return cmd_eval(eval);
    if (cmd_r->parsed()) return cmd_rerun(rerun);
  } catch (const IoError& e) {
    std::fprintf(stderr, "i/o error: %s\n", e.what());
    return kIoError;
  } catch (const DataError& e) {
    std::fprintf(stderr, "data error: %s\n", e.what());
    return kDataError;
  } catch (const NumericalFailure& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return kNumericalError;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kUsageError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 70;
  }
  return kUsageError;
}
