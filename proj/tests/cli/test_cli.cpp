#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code = -1;
  std::string output;
};

// Runs the built binary with a shell redirect; stdout and stderr combined.
RunResult run_cli(const std::string& args, const fs::path& dir) {
  const fs::path log = dir / "cli.log";
  const std::string cmd = "cd '" + dir.string() + "' && '" + GRAPHLEARN_CLI_BIN + "' " + args +
                          " > '" + log.string() + "' 2>&1";
  const int status = std::system(cmd.c_str());
  RunResult result;
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(log);
  std::ostringstream content;
  content << in.rdbuf();
  result.output = content.str();
  return result;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream content;
  content << in.rdbuf();
  return content.str();
}

// Trace CSVs differ run-to-run only in the wall-clock column; strip it.
std::string drop_last_column(const std::string& csv) {
  std::ostringstream out;
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line)) {
    const auto comma = line.rfind(',');
    out << (comma == std::string::npos ? line : line.substr(0, comma)) << '\n';
  }
  return out.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("graphlearn-test-" + std::to_string(::getpid()) + "-" +
            std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

}  // namespace

TEST_CASE("gen-graph writes an edge list with header and manifest") {
  TempDir dir;
  const RunResult r =
      run_cli("gen-graph --model er --nodes 200 --p 0.1 --seed 7 -o er.edges", dir.path);
  CHECK(r.code == 0);
  const std::string edges = slurp(dir.path / "er.edges");
  CHECK(edges.rfind("nodes 200\n", 0) == 0);
  CHECK(fs::exists(dir.path / "er.edges.manifest.json"));

  // Binary truth graphs omit the weight column.
  std::istringstream in(edges);
  std::string header, line;
  std::getline(in, header);
  std::getline(in, line);
  int i = 0, j = 0;
  std::istringstream fields(line);
  CHECK((fields >> i >> j));
  double w = 0.0;
  CHECK_FALSE((fields >> w));
}

TEST_CASE("gen-graph rejects bad flags with the usage exit code") {
  TempDir dir;
  CHECK(run_cli("gen-graph --model er --nodes 10 --p 1.5", dir.path).code == 2);
  CHECK(run_cli("gen-graph --model what --nodes 10", dir.path).code == 2);
  CHECK(run_cli("gen-graph --nodes 10", dir.path).code == 2);  // --model required
}

TEST_CASE("gen-graph sbm writes a two-block graph") {
  TempDir dir;
  const RunResult r = run_cli(
      "gen-graph --model sbm --blocks 100,100 --p-in 0.3 --p-out 0.05 --seed 3 -o sbm.edges",
      dir.path);
  CHECK(r.code == 0);
  CHECK(slurp(dir.path / "sbm.edges").rfind("nodes 200\n", 0) == 0);
}

TEST_CASE("gen-signals is deterministic and needs an existing graph") {
  TempDir dir;
  REQUIRE(run_cli("gen-graph --model er --nodes 12 --p 0.4 --seed 1 -o g.edges", dir.path).code ==
          0);
  REQUIRE(run_cli("gen-signals --graph g.edges --signals 20 --sigma 0.1 --seed 5 -o a.csv",
                  dir.path).code == 0);
  REQUIRE(run_cli("gen-signals --graph g.edges --signals 20 --sigma 0.1 --seed 5 -o b.csv",
                  dir.path).code == 0);
  CHECK(slurp(dir.path / "a.csv") == slurp(dir.path / "b.csv"));

  CHECK(run_cli("gen-signals --graph missing.edges --signals 5 -o c.csv", dir.path).code == 3);
}

TEST_CASE("learn recovers the scalar fixture and rejects beta <= 0") {
  TempDir dir;
  // N = 2, P = 1, rows 0 and 1: squared distance exactly 1.
  {
    std::ofstream sig(dir.path / "x.csv");
    sig << "0\n1\n";
  }
  const RunResult r = run_cli(
      "learn --signals x.csv --alpha 1 --beta 1 --tol 1e-12 --max-iter 4000 -o w.edges",
      dir.path);
  CHECK(r.code == 0);
  const std::string learned = slurp(dir.path / "w.edges");
  std::istringstream in(learned);
  std::string header;
  std::getline(in, header);
  int i = 0, j = 0;
  double w = 0.0;
  in >> i >> j >> w;
  CHECK(i == 0);
  CHECK(j == 1);
  CHECK(w == doctest::Approx(0.6180339887498948).epsilon(1e-8));

  const RunResult bad =
      run_cli("learn --signals x.csv --alpha 1 --beta 0 -o w2.edges", dir.path);
  CHECK(bad.code == 2);
  CHECK(bad.output.find("(N-1)/beta") != std::string::npos);
}

TEST_CASE("learn with dpg emits a monotone dual objective trace") {
  TempDir dir;
  REQUIRE(run_cli("gen-graph --model er --nodes 15 --p 0.3 --seed 2 -o g.edges", dir.path).code ==
          0);
  REQUIRE(run_cli("gen-signals --graph g.edges --signals 30 --sigma 0.1 --seed 4 -o x.csv",
                  dir.path).code == 0);
  REQUIRE(run_cli("learn --signals x.csv --variant dpg --distance-scale 0.1 --max-iter 300 "
                  "--tol 0 -o w.edges --trace t.csv",
                  dir.path).code == 0);
  std::istringstream trace(slurp(dir.path / "t.csv"));
  std::string line;
  std::getline(trace, line);
  CHECK(line == "k,dual_obj,primal_obj,step_change,err_to_ref,elapsed_s");
  double prev = 1e300;
  int rows = 0;
  while (std::getline(trace, line)) {
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    const double dual = std::strtod(line.substr(c1 + 1, c2 - c1 - 1).c_str(), nullptr);
    CHECK(dual <= prev + 1e-9 * std::max(1.0, std::abs(prev)));
    prev = dual;
    ++rows;
  }
  CHECK(rows == 300);
}

TEST_CASE("learn with a reference fills the err_to_ref column") {
  TempDir dir;
  {
    std::ofstream sig(dir.path / "x.csv");
    sig << "0\n1\n";
  }
  REQUIRE(run_cli("learn --signals x.csv --tol 1e-13 --max-iter 4000 -o ref.edges", dir.path)
              .code == 0);
  REQUIRE(run_cli("learn --signals x.csv --reference ref.edges --max-iter 50 --tol 0 "
                  "-o w.edges --trace t.csv",
                  dir.path).code == 0);
  std::istringstream trace(slurp(dir.path / "t.csv"));
  std::string line;
  std::getline(trace, line);  // header
  std::getline(trace, line);
  // err_to_ref is the fifth of six columns and must be nonempty.
  int commas = 0;
  std::size_t start = 0, pos = 0;
  std::string err_cell;
  while ((pos = line.find(',', start)) != std::string::npos) {
    ++commas;
    if (commas == 5) {
      err_cell = line.substr(start, pos - start);
    }
    start = pos + 1;
  }
  CHECK(commas == 5);
  CHECK_FALSE(err_cell.empty());
}

TEST_CASE("eval scores learned against truth and catches node mismatch") {
  TempDir dir;
  REQUIRE(run_cli("gen-graph --model er --nodes 10 --p 0.4 --seed 9 -o g.edges", dir.path).code ==
          0);
  // Perfect recovery: evaluate the truth against itself.
  const RunResult r = run_cli("eval --learned g.edges --truth g.edges -o report.csv", dir.path);
  CHECK(r.code == 0);
  const std::string report = slurp(dir.path / "report.csv");
  CHECK(report.find("\n") != std::string::npos);
  // f_measure column (8th) is 1.
  CHECK(r.output.find("F=1.0000") != std::string::npos);

  REQUIRE(run_cli("gen-graph --model er --nodes 11 --p 0.4 --seed 9 -o g11.edges", dir.path)
              .code == 0);
  CHECK(run_cli("eval --learned g11.edges --truth g.edges -o r2.csv", dir.path).code == 4);
}

TEST_CASE("eval grid mode emits a table with exactly one best row") {
  TempDir dir;
  REQUIRE(run_cli("gen-graph --model sbm --blocks 8,8 --p-in 0.7 --p-out 0.05 --seed 5 "
                  "-o g.edges",
                  dir.path).code == 0);
  REQUIRE(run_cli("gen-signals --graph g.edges --signals 100 --sigma 0.05 --seed 6 -o x.csv",
                  dir.path).code == 0);
  const RunResult r = run_cli(
      "eval --grid --truth g.edges --signals x.csv --alphas 0.5,5 --betas 0.5,5 "
      "--max-iter 300 --tol 1e-6 -o grid.csv",
      dir.path);
  CHECK(r.code == 0);
  std::istringstream table(slurp(dir.path / "grid.csv"));
  std::string line;
  std::getline(table, line);
  CHECK(line ==
        "alpha,beta,threshold,tp,fp,fn,tn,precision,recall,f_measure,failed,best");
  int rows = 0, best = 0;
  while (std::getline(table, line)) {
    ++rows;
    if (line.size() >= 2 && line.compare(line.size() - 2, 2, ",1") == 0) ++best;
  }
  CHECK(rows == 4);
  CHECK(best == 1);
}

TEST_CASE("benchmark writes per-variant traces and a summary") {
  TempDir dir;
  REQUIRE(run_cli("gen-graph --model er --nodes 12 --p 0.4 --seed 11 -o g.edges", dir.path)
              .code == 0);
  REQUIRE(run_cli("gen-signals --graph g.edges --signals 50 --sigma 0.1 --seed 12 -o x.csv",
                  dir.path).code == 0);
  const RunResult r = run_cli(
      "benchmark --signals x.csv --distance-scale 0.05 --alpha 1 --beta 1 "
      "--variants fdpg,dpg --targets 1e-1,1e-3,1e-5 --max-iter 4000 "
      "--oracle-max-iter 20000 -o bench",
      dir.path);
  CHECK(r.code == 0);
  CHECK(fs::exists(dir.path / "bench_fdpg.trace.csv"));
  CHECK(fs::exists(dir.path / "bench_dpg.trace.csv"));
  const std::string summary = slurp(dir.path / "bench_summary.csv");
  CHECK(summary.rfind("variant,target,iterations,seconds\n", 0) == 0);
  CHECK(summary.find("fdpg,") != std::string::npos);
  CHECK(summary.find("dpg,") != std::string::npos);

  // Unreachable target is recorded, not an error.
  const RunResult nr = run_cli(
      "benchmark --signals x.csv --distance-scale 0.05 --alpha 1 --beta 1 --variants dpg "
      "--targets 1e-30 --max-iter 50 --oracle-max-iter 20000 -o tight",
      dir.path);
  CHECK(nr.code == 0);
  CHECK(slurp(dir.path / "tight_summary.csv").find("not reached") != std::string::npos);
}

TEST_CASE("rerun reproduces non-timing outputs byte for byte") {
  TempDir dir;
  REQUIRE(run_cli("gen-graph --model er --nodes 14 --p 0.3 --seed 21 -o g.edges", dir.path)
              .code == 0);
  REQUIRE(run_cli("gen-signals --graph g.edges --signals 25 --sigma 0.1 --seed 22 -o x.csv",
                  dir.path).code == 0);
  REQUIRE(run_cli("learn --signals x.csv --distance-scale 0.1 --max-iter 500 --tol 1e-9 "
                  "-o w.edges",
                  dir.path).code == 0);

  REQUIRE(run_cli("rerun --manifest g.edges.manifest.json --out-dir again", dir.path).code == 0);
  CHECK(slurp(dir.path / "g.edges") == slurp(dir.path / "again" / "g.edges"));

  REQUIRE(run_cli("rerun --manifest x.csv.manifest.json --out-dir again", dir.path).code == 0);
  CHECK(slurp(dir.path / "x.csv") == slurp(dir.path / "again" / "x.csv"));

  REQUIRE(run_cli("rerun --manifest w.edges.manifest.json --out-dir again", dir.path).code == 0);
  CHECK(slurp(dir.path / "w.edges") == slurp(dir.path / "again" / "w.edges"));
  CHECK(drop_last_column(slurp(dir.path / "w.edges.trace.csv")) ==
        drop_last_column(slurp(dir.path / "again" / "w.edges.trace.csv")));

  // A changed input is refused.
  {
    std::ofstream g(dir.path / "g.edges", std::ios::app);
    g << "\n";
  }
  CHECK(run_cli("rerun --manifest x.csv.manifest.json --out-dir again2", dir.path).code == 4);
}

TEST_CASE("no temp files are left next to outputs") {
  TempDir dir;
  REQUIRE(run_cli("gen-graph --model er --nodes 10 --p 0.2 --seed 2 -o g.edges", dir.path).code ==
          0);
  int leftovers = 0;
  for (const auto& entry : fs::directory_iterator(dir.path)) {
    if (entry.path().string().find(".tmp-") != std::string::npos) ++leftovers;
  }
  CHECK(leftovers == 0);
}

TEST_CASE("GRAPHLEARN_OUT redirects relative output paths") {
  TempDir dir;
  const fs::path outdir = dir.path / "redirected";
  const std::string cmd = "cd '" + dir.path.string() + "' && GRAPHLEARN_OUT='" +
                          outdir.string() + "' '" + GRAPHLEARN_CLI_BIN +
                          "' gen-graph --model er --nodes 8 --p 0.5 --seed 1 -o g.edges "
                          ">/dev/null 2>&1";
  REQUIRE(std::system(cmd.c_str()) == 0);
  CHECK(fs::exists(outdir / "g.edges"));
  CHECK(fs::exists(outdir / "g.edges.manifest.json"));
  CHECK_FALSE(fs::exists(dir.path / "g.edges"));
}
