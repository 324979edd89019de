#include "graphlearn/io.hpp"

#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "graphlearn/errors.hpp"

namespace graphlearn::cli {

namespace fs = std::filesystem;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  std::ostringstream content;
  content << in.rdbuf();
  return content.str();
}

std::string file_checksum(const fs::path& path) {
  const std::string bytes = read_file(path);
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

void atomic_write_file(const fs::path& path, const std::string& content) {
  const fs::path dir = path.parent_path();
  if (!dir.empty()) {
    std::error_code ec;
    fs::create_directories(dir, ec);
  }
  const fs::path tmp = path.string() + ".tmp-" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw IoError("cannot write " + tmp.string());
    }
    out << content;
    if (!out.flush()) {
      throw IoError("short write to " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot move " + tmp.string() + " to " + path.string());
  }
}

fs::path resolve_output_path(const fs::path& path) {
  if (path.is_absolute()) return path;
  const char* base = std::getenv("GRAPHLEARN_OUT");
  if (base == nullptr || *base == '\0') return path;
  return fs::path(base) / path;
}

std::string render_edge_list(const EdgeVector& edges, bool binary) {
  std::ostringstream out;
  out << "nodes " << edges.n_nodes() << "\n";
  const int n = edges.n_nodes();
  std::size_t k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++k) {
      const double w = edges.values()[static_cast<Eigen::Index>(k)];
      if (w <= 0.0) continue;
      out << i << ' ' << j;
      if (!binary) {
        out << ' ' << format_double(w);
      }
      out << '\n';
    }
  }
  return out.str();
}

EdgeVector parse_edge_list(const std::string& content, const std::string& origin) {
  std::istringstream in(content);
  std::string header;
  int n = 0;
  if (!(in >> header >> n) || header != "nodes" || n < 1) {
    throw DataError(origin + ": expected 'nodes N' header");
  }
  Vector values = Vector::Zero(static_cast<Eigen::Index>(edge_count(n)));
  std::string line;
  std::getline(in, line);  // rest of the header line
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream fields(line);
    int i = 0, j = 0;
    double w = 1.0;
    if (!(fields >> i >> j)) {
      throw DataError(origin + ":" + std::to_string(lineno) + ": expected 'i j [weight]'");
    }
    fields >> w;
    if (i < 0 || j >= n || i >= j) {
      throw DataError(origin + ":" + std::to_string(lineno) + ": bad pair " +
                      std::to_string(i) + " " + std::to_string(j));
    }
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw DataError(origin + ":" + std::to_string(lineno) + ": bad weight");
    }
    values[static_cast<Eigen::Index>(edge_index(i, j, n))] = w;
  }
  return EdgeVector::nonnegative(n, std::move(values));
}

void write_edge_list(const fs::path& path, const EdgeVector& edges, bool binary) {
  atomic_write_file(path, render_edge_list(edges, binary));
}

EdgeVector read_edge_list(const fs::path& path) {
  return parse_edge_list(read_file(path), path.string());
}

std::string render_signals_csv(const SignalMatrix& signals) {
  std::ostringstream out;
  for (int i = 0; i < signals.n_nodes(); ++i) {
    for (int p = 0; p < signals.n_signals(); ++p) {
      if (p > 0) out << ',';
      out << format_double(signals.values()(i, p));
    }
    out << '\n';
  }
  return out.str();
}

SignalMatrix parse_signals_csv(const std::string& content, const std::string& origin) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(content);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<double> row;
    std::size_t pos = 0;
    while (pos <= line.size()) {
      const std::size_t comma = line.find(',', pos);
      const std::string cell =
          line.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      char* end = nullptr;
      const double v = std::strtod(cell.c_str(), &end);
      if (end == cell.c_str()) {
        throw DataError(origin + ":" + std::to_string(lineno) + ": bad number '" + cell + "'");
      }
      row.push_back(v);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw DataError(origin + ":" + std::to_string(lineno) + ": ragged row");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw DataError(origin + ": empty signal file");
  }
  Matrix values(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t p = 0; p < rows[i].size(); ++p) {
      values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(p)) = rows[i][p];
    }
  }
  return SignalMatrix(std::move(values));
}

void write_signals_csv(const fs::path& path, const SignalMatrix& signals) {
  atomic_write_file(path, render_signals_csv(signals));
}

SignalMatrix read_signals_csv(const fs::path& path) {
  return parse_signals_csv(read_file(path), path.string());
}

std::string render_trace_csv(const ConvergenceTrace& trace) {
  std::ostringstream out;
  out << "k,dual_obj,primal_obj,step_change,err_to_ref,elapsed_s\n";
  for (const TraceRecord& rec : trace.records) {
    out << rec.k << ',' << format_double(rec.dual_obj) << ',' << format_double(rec.primal_obj)
        << ',' << format_double(rec.step_change) << ',';
    if (rec.err_to_ref) {
      out << format_double(*rec.err_to_ref);
    }
    out << ',' << format_double(rec.elapsed_s) << '\n';
  }
  return out.str();
}

void write_trace_csv(const fs::path& path, const ConvergenceTrace& trace) {
  atomic_write_file(path, render_trace_csv(trace));
}

}  // namespace graphlearn::cli
