#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphlearn/types.hpp"

namespace graphlearn {

/// Ground-truth graph for synthetic experiments. The EdgeVector
/// representation keeps it hollow and symmetric by construction.
struct GroundTruthGraph {
  EdgeVector edges;
  /// Generator description recorded in manifests, e.g. "er(p=0.1)".
  std::string model;
  std::uint64_t seed = 0;
  /// Laplacian pseudoinverse sampling is defined either way; the flag is
  /// recorded because isolated nodes make the smoothness prior trivial there.
  bool connected = false;
};

struct SignalModelConfig {
  double sigma_e = 0.1;
  int n_signals = 1000;
  std::uint64_t seed = 0;
};

/// Erdos-Renyi draw: each of the m pairs is an edge (weight 1)
/// independently with probability p. Pairs are visited in canonical order,
/// one uniform each, on the graph stream of `seed`.
GroundTruthGraph generate_er(int n_nodes, double p, std::uint64_t seed);

/// Stochastic block model: within-block pairs with probability p_in,
/// cross-block pairs with p_out. Nodes are numbered block by block.
GroundTruthGraph generate_sbm(const std::vector<int>& block_sizes, double p_in, double p_out,
                              std::uint64_t seed);

/// Whether the graph encoded by `edges` (entries > 0) is connected.
bool is_connected(const EdgeVector& edges);

/// Moore-Penrose pseudoinverse of a symmetric PSD matrix by symmetric
/// eigendecomposition; eigenvalues below rank_tol_factor * lambda_max are
/// treated as exact zeros.
Matrix laplacian_pseudoinverse(const Matrix& laplacian, double rank_tol_factor = 1e-8);

/// Draw P i.i.d. signals x_p ~ N(0, pinv(L) + sigma_e^2 I) on the signal
/// stream of config.seed: x = V diag(sqrt(s_pinv)) z + sigma_e z' with
/// independent standard normal z, z'. Z is filled column by column, then Z'.
SignalMatrix sample_smooth_signals(const GroundTruthGraph& graph,
                                   const SignalModelConfig& config);

}  // namespace graphlearn
