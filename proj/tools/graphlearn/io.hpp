#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include "graphlearn/solver.hpp"
#include "graphlearn/types.hpp"

namespace graphlearn::cli {

/// File-system level failure: missing input, unwritable output.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// %.17g rendering used by every numeric file, precise enough for exact
/// double round-trips.
std::string format_double(double v);

/// fnv1a64:<16 hex digits> over the raw file bytes.
std::string file_checksum(const std::filesystem::path& path);

/// Write content to a temp file in the target directory, then rename into
/// place. Partial outputs never appear under the final name.
void atomic_write_file(const std::filesystem::path& path, const std::string& content);

/// Resolve an output path against the GRAPHLEARN_OUT directory when the
/// path is relative and the variable is set.
std::filesystem::path resolve_output_path(const std::filesystem::path& path);

// Edge list: header "nodes N", then one "i j [weight]" line per positive
// entry, zero-based, i < j; a missing weight means 1.0. Unlisted pairs
// are zero.
std::string render_edge_list(const EdgeVector& edges, bool binary);
EdgeVector parse_edge_list(const std::string& content, const std::string& origin);
void write_edge_list(const std::filesystem::path& path, const EdgeVector& edges, bool binary);
EdgeVector read_edge_list(const std::filesystem::path& path);

// Signal CSV: no header, N rows by P comma-separated columns.
std::string render_signals_csv(const SignalMatrix& signals);
SignalMatrix parse_signals_csv(const std::string& content, const std::string& origin);
void write_signals_csv(const std::filesystem::path& path, const SignalMatrix& signals);
SignalMatrix read_signals_csv(const std::filesystem::path& path);

// Trace CSV: fixed columns k,dual_obj,primal_obj,step_change,err_to_ref,
// elapsed_s; the err_to_ref cell is empty when no reference was supplied.
std::string render_trace_csv(const ConvergenceTrace& trace);
void write_trace_csv(const std::filesystem::path& path, const ConvergenceTrace& trace);

std::string read_file(const std::filesystem::path& path);

}  // namespace graphlearn::cli
