#include "graphlearn/commands.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <sstream>

#include "graphlearn/datagen.hpp"
#include "graphlearn/errors.hpp"
#include "graphlearn/evaluation.hpp"
#include "graphlearn/io.hpp"
#include "graphlearn/manifest.hpp"
#include "graphlearn/objective.hpp"

namespace graphlearn::cli {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

double elapsed_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

fs::path manifest_path_for(const fs::path& primary_output) {
  return fs::path(primary_output.string() + ".manifest.json");
}

// Instance loading shared by learn/benchmark/eval: exactly one of
// --signals (distances computed from the rows) or --distances.
EdgeVector load_instance(const std::string& signals, const std::string& distances,
                         double distance_scale) {
  if (signals.empty() == distances.empty()) {
    throw std::invalid_argument("give exactly one of --signals or --distances");
  }
  if (!(distance_scale > 0.0)) {
    throw std::invalid_argument("--distance-scale must be > 0");
  }
  EdgeVector e = signals.empty() ? read_edge_list(distances)
                                 : distance_vector(read_signals_csv(signals));
  if (distance_scale != 1.0) {
    e = EdgeVector::nonnegative(e.n_nodes(), distance_scale * e.values());
  }
  return e;
}

GroundTruthGraph load_truth(const std::string& path) {
  EdgeVector edges = read_edge_list(path);
  const bool connected = is_connected(edges);
  return GroundTruthGraph{std::move(edges), "file:" + path, 0, connected};
}

std::string render_eval_report_csv(const EvalReport& report) {
  std::ostringstream out;
  out << "threshold,tp,fp,fn,tn,precision,recall,f_measure,all_zero\n";
  out << format_double(report.threshold) << ',' << report.tp << ',' << report.fp << ','
      << report.fn << ',' << report.tn << ',' << format_double(report.precision) << ','
      << format_double(report.recall) << ',' << format_double(report.f_measure) << ','
      << (report.all_zero ? 1 : 0) << '\n';
  return out.str();
}

std::string render_grid_csv(const GridSearchResult& result) {
  std::ostringstream out;
  out << "alpha,beta,threshold,tp,fp,fn,tn,precision,recall,f_measure,failed,best\n";
  for (const GridCell& cell : result.table) {
    const EvalReport& r = cell.report;
    const bool best = cell.alpha == result.best.alpha && cell.beta == result.best.beta;
    out << format_double(cell.alpha) << ',' << format_double(cell.beta) << ','
        << format_double(r.threshold) << ',' << r.tp << ',' << r.fp << ',' << r.fn << ','
        << r.tn << ',' << format_double(r.precision) << ',' << format_double(r.recall) << ','
        << format_double(r.f_measure) << ',' << (cell.failed ? 1 : 0) << ',' << (best ? 1 : 0)
        << '\n';
  }
  return out.str();
}

std::string render_benchmark_summary_csv(const BenchmarkResult& result) {
  std::ostringstream out;
  out << "variant,target,iterations,seconds\n";
  for (const VariantResult& vr : result.variants) {
    for (const TargetHit& hit : vr.hits) {
      out << vr.name << ',' << format_double(hit.target) << ',';
      if (hit.iteration) {
        out << *hit.iteration << ',' << format_double(*hit.seconds);
      } else {
        out << "not reached,not reached";
      }
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace

SolverConfig SolverFlags::to_config() const {
  SolverConfig config;
  config.alpha = alpha;
  config.beta = beta;
  if (variant == "fdpg") {
    config.variant = Variant::FDPG;
  } else if (variant == "dpg") {
    config.variant = Variant::DPG;
  } else {
    throw std::invalid_argument("--variant must be fdpg or dpg, got '" + variant + "'");
  }
  config.restart_interval =
      restart > 0 ? std::optional<int>(restart) : std::nullopt;
  config.max_iter = max_iter;
  config.tol = tol;
  if (init == "zeros") {
    config.init = Init::Zeros;
  } else if (init == "gaussian") {
    config.init = Init::Gaussian;
  } else {
    throw std::invalid_argument("--init must be zeros or gaussian, got '" + init + "'");
  }
  config.init_seed = init_seed;
  config.trace_stride = trace_stride;
  return config;
}

int cmd_gen_graph(const GenGraphOptions& options) {
  const auto start = Clock::now();
  GroundTruthGraph graph = [&] {
    if (options.model == "er") {
      return generate_er(options.nodes, options.p, options.seed);
    }
    if (options.model == "sbm") {
      return generate_sbm(options.blocks, options.p_in, options.p_out, options.seed);
    }
    throw std::invalid_argument("--model must be er or sbm, got '" + options.model + "'");
  }();

  const fs::path out = resolve_output_path(options.out);
  write_edge_list(out, graph.edges, /*binary=*/true);

  RunManifest manifest;
  manifest.command = "gen-graph";
  manifest.config = options;
  manifest.config["out"] = out.string();
  manifest.config["info"] = {{"model", graph.model},
                             {"connected", graph.connected},
                             {"edges", graph.edges.values().sum()}};
  manifest.add_output(out);
  manifest.wall_s = elapsed_since(start);
  manifest.write(manifest_path_for(out));

  std::printf("wrote %s (%d nodes, %g edges, %s)\n", out.string().c_str(),
              graph.edges.n_nodes(), graph.edges.values().sum(),
              graph.connected ? "connected" : "disconnected");
  return kOk;
}

int cmd_gen_signals(const GenSignalsOptions& options) {
  const auto start = Clock::now();
  if (options.graph.empty()) {
    throw std::invalid_argument("--graph is required");
  }
  EdgeVector edges = read_edge_list(options.graph);
  GroundTruthGraph graph{std::move(edges), "file:" + options.graph, 0, false};
  graph.connected = is_connected(graph.edges);

  SignalModelConfig config{options.sigma, options.signals, options.seed};
  const SignalMatrix signals = sample_smooth_signals(graph, config);

  const fs::path out = resolve_output_path(options.out);
  write_signals_csv(out, signals);

  RunManifest manifest;
  manifest.command = "gen-signals";
  manifest.config = options;
  manifest.config["out"] = out.string();
  manifest.add_input(options.graph);
  manifest.add_output(out);
  manifest.wall_s = elapsed_since(start);
  manifest.write(manifest_path_for(out));

  std::printf("wrote %s (%d x %d)\n", out.string().c_str(), signals.n_nodes(),
              signals.n_signals());
  return kOk;
}

int cmd_learn(const LearnOptions& options) {
  const auto start = Clock::now();
  const EdgeVector e = load_instance(options.signals, options.distances, options.distance_scale);
  const SolverConfig config = options.solver.to_config();

  std::optional<EdgeVector> reference;
  if (!options.reference.empty()) {
    reference = read_edge_list(options.reference);
  }

  const SolveResult result = solve(e, config, reference ? &*reference : nullptr);

  const fs::path out = resolve_output_path(options.out);
  const fs::path trace_path =
      resolve_output_path(options.trace.empty() ? options.out + ".trace.csv" : options.trace);
  write_edge_list(out, result.w, /*binary=*/false);
  write_trace_csv(trace_path, result.trace);

  RunManifest manifest;
  manifest.command = "learn";
  manifest.config = options;
  manifest.config["out"] = out.string();
  manifest.config["trace"] = trace_path.string();
  if (!options.signals.empty()) manifest.add_input(options.signals);
  if (!options.distances.empty()) manifest.add_input(options.distances);
  if (!options.reference.empty()) manifest.add_input(options.reference);
  manifest.add_output(out);
  manifest.add_output(trace_path);
  manifest.config["info"] = {{"iterations", result.iterations},
                             {"converged", result.converged}};
  manifest.wall_s = elapsed_since(start);
  manifest.write(manifest_path_for(out));

  std::printf("wrote %s (%s after %d iterations), trace %s\n", out.string().c_str(),
              result.converged ? "converged" : "max_iter reached", result.iterations,
              trace_path.string().c_str());
  return kOk;
}

int cmd_benchmark(const BenchmarkOptions& options) {
  const auto start = Clock::now();
  const EdgeVector e = load_instance(options.signals, options.distances, options.distance_scale);

  if (options.variants.empty()) {
    throw std::invalid_argument("--variants must name at least one of fdpg,dpg");
  }
  std::vector<SolverConfig> variants;
  for (const std::string& name : options.variants) {
    SolverFlags flags;
    flags.alpha = options.alpha;
    flags.beta = options.beta;
    flags.variant = name;
    flags.restart = options.restart;
    flags.max_iter = options.max_iter;
    flags.tol = 0.0;  // benchmark runs compare full trajectories
    flags.init = options.init;
    flags.init_seed = options.init_seed;
    variants.push_back(flags.to_config());
  }

  const BenchmarkResult result =
      benchmark(e, options.alpha, options.beta, variants, options.targets,
                options.oracle_max_iter);

  const fs::path prefix = resolve_output_path(options.out);
  RunManifest manifest;
  manifest.command = "benchmark";
  manifest.config = options;
  manifest.config["out"] = prefix.string();
  if (!options.signals.empty()) manifest.add_input(options.signals);
  if (!options.distances.empty()) manifest.add_input(options.distances);

  for (const VariantResult& vr : result.variants) {
    const fs::path trace_path = prefix.string() + "_" + vr.name + ".trace.csv";
    write_trace_csv(trace_path, vr.trace);
    manifest.add_output(trace_path);
  }
  const fs::path summary_path = prefix.string() + "_summary.csv";
  atomic_write_file(summary_path, render_benchmark_summary_csv(result));
  manifest.add_output(summary_path);

  manifest.config["info"] = {{"reference_residual", result.reference_residual}};
  manifest.wall_s = elapsed_since(start);
  manifest.write(manifest_path_for(prefix));

  std::printf("wrote %s (reference residual %.3g)\n", summary_path.string().c_str(),
              result.reference_residual);
  return kOk;
}

int cmd_eval(const EvalOptions& options) {
  const auto start = Clock::now();
  if (options.truth.empty()) {
    throw std::invalid_argument("--truth is required");
  }
  const GroundTruthGraph truth = load_truth(options.truth);
  const ThresholdPolicy policy{options.threshold};
  const fs::path out = resolve_output_path(options.out);

  RunManifest manifest;
  manifest.command = "eval";
  manifest.config = options;
  manifest.config["out"] = out.string();
  manifest.add_input(options.truth);

  if (options.grid) {
    const EdgeVector e =
        load_instance(options.signals, options.distances, options.distance_scale);
    if (e.n_nodes() != truth.edges.n_nodes()) {
      throw DataError("eval: instance has " + std::to_string(e.n_nodes()) +
                      " nodes but truth has " + std::to_string(truth.edges.n_nodes()));
    }
    const std::vector<double> alphas = options.alphas.empty() ? default_grid() : options.alphas;
    const std::vector<double> betas = options.betas.empty() ? default_grid() : options.betas;
    manifest.config["alphas"] = alphas;
    manifest.config["betas"] = betas;

    const GridSearchResult result = grid_search(e, truth, alphas, betas,
                                                options.solver.to_config(), policy,
                                                options.workers);
    atomic_write_file(out, render_grid_csv(result));
    if (!options.signals.empty()) manifest.add_input(options.signals);
    if (!options.distances.empty()) manifest.add_input(options.distances);
    manifest.add_output(out);
    manifest.config["info"] = {{"best_alpha", result.best.alpha},
                               {"best_beta", result.best.beta},
                               {"best_f_measure", result.best.report.f_measure}};
    manifest.wall_s = elapsed_since(start);
    manifest.write(manifest_path_for(out));
    std::printf("wrote %s (best alpha=%g beta=%g F=%.4f)\n", out.string().c_str(),
                result.best.alpha, result.best.beta, result.best.report.f_measure);
    return kOk;
  }

  if (options.learned.empty()) {
    throw std::invalid_argument("--learned is required unless --grid is given");
  }
  const EdgeVector learned = read_edge_list(options.learned);
  if (learned.n_nodes() != truth.edges.n_nodes()) {
    throw DataError("eval: learned graph has " + std::to_string(learned.n_nodes()) +
                    " nodes but truth has " + std::to_string(truth.edges.n_nodes()));
  }
  const EvalReport report = f_measure(learned, truth, policy);
  atomic_write_file(out, render_eval_report_csv(report));
  manifest.add_input(options.learned);
  manifest.add_output(out);
  manifest.wall_s = elapsed_since(start);
  manifest.write(manifest_path_for(out));
  std::printf("wrote %s (F=%.4f precision=%.4f recall=%.4f)\n", out.string().c_str(),
              report.f_measure, report.precision, report.recall);
  return kOk;
}

int cmd_rerun(const RerunOptions& options) {
  if (options.manifest.empty()) {
    throw std::invalid_argument("--manifest is required");
  }
  const RunManifest manifest = RunManifest::read(options.manifest);

  // Refuse to "reproduce" from inputs that have changed since the run.
  for (const auto& [path, checksum] : manifest.inputs) {
    const std::string now = file_checksum(path);
    if (now != checksum) {
      throw DataError("rerun: input " + path + " changed (" + now + " != " + checksum + ")");
    }
  }

  auto remap = [&](std::string path_str) {
    if (options.out_dir.empty()) return path_str;
    return (fs::path(options.out_dir) / fs::path(path_str).filename()).string();
  };

  const nlohmann::json& config = manifest.config;
  if (manifest.command == "gen-graph") {
    auto opts = config.get<GenGraphOptions>();
    opts.out = remap(opts.out);
    return cmd_gen_graph(opts);
  }
  if (manifest.command == "gen-signals") {
    auto opts = config.get<GenSignalsOptions>();
    opts.out = remap(opts.out);
    return cmd_gen_signals(opts);
  }
  if (manifest.command == "learn") {
    auto opts = config.get<LearnOptions>();
    if (opts.trace.empty()) opts.trace = opts.out + ".trace.csv";
    opts.out = remap(opts.out);
    opts.trace = remap(opts.trace);
    return cmd_learn(opts);
  }
  if (manifest.command == "benchmark") {
    auto opts = config.get<BenchmarkOptions>();
    opts.out = remap(opts.out);
    return cmd_benchmark(opts);
  }
  if (manifest.command == "eval") {
    auto opts = config.get<EvalOptions>();
    opts.out = remap(opts.out);
    return cmd_eval(opts);
  }
  throw DataError("rerun: unknown command '" + manifest.command + "' in manifest");
}

}  // namespace graphlearn::cli
