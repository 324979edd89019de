#include "graphlearn/datagen.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "graphlearn/objective.hpp"
#include "graphlearn/rng.hpp"

namespace graphlearn {

namespace {

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1], got " +
                                std::to_string(p));
  }
}

}  // namespace

bool is_connected(const EdgeVector& edges) {
  const int n = edges.n_nodes();
  // Union-find over present edges.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::size_t k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++k) {
      if (edges.values()[static_cast<Eigen::Index>(k)] > 0.0) {
        parent[find(i)] = find(j);
      }
    }
  }
  const int root = find(0);
  for (int i = 1; i < n; ++i) {
    if (find(i) != root) return false;
  }
  return true;
}

GroundTruthGraph generate_er(int n_nodes, double p, std::uint64_t seed) {
  if (n_nodes < 2) {
    throw std::invalid_argument("generate_er: n_nodes must be >= 2");
  }
  check_probability(p, "generate_er: p");
  Rng rng(seed, Rng::Stream::Graph);
  Vector values(static_cast<Eigen::Index>(edge_count(n_nodes)));
  for (Eigen::Index k = 0; k < values.size(); ++k) {
    values[k] = rng.uniform01() < p ? 1.0 : 0.0;
  }
  EdgeVector edges = EdgeVector::nonnegative(n_nodes, std::move(values));
  const bool connected = is_connected(edges);
  return GroundTruthGraph{std::move(edges), "er(p=" + std::to_string(p) + ")", seed, connected};
}

GroundTruthGraph generate_sbm(const std::vector<int>& block_sizes, double p_in, double p_out,
                              std::uint64_t seed) {
  if (block_sizes.empty()) {
    throw std::invalid_argument("generate_sbm: need at least one block");
  }
  for (int b : block_sizes) {
    if (b < 1) {
      throw std::invalid_argument("generate_sbm: block sizes must be >= 1");
    }
  }
  check_probability(p_in, "generate_sbm: p_in");
  check_probability(p_out, "generate_sbm: p_out");

  const int n = std::accumulate(block_sizes.begin(), block_sizes.end(), 0);
  if (n < 2) {
    throw std::invalid_argument("generate_sbm: need at least 2 nodes in total");
  }
  // block[i] = community of node i; nodes are numbered block by block.
  std::vector<int> block(n);
  int node = 0;
  for (std::size_t b = 0; b < block_sizes.size(); ++b) {
    for (int r = 0; r < block_sizes[b]; ++r) {
      block[node++] = static_cast<int>(b);
    }
  }

  Rng rng(seed, Rng::Stream::Graph);
  Vector values(static_cast<Eigen::Index>(edge_count(n)));
  Eigen::Index k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++k) {
      const double p = block[i] == block[j] ? p_in : p_out;
      values[k] = rng.uniform01() < p ? 1.0 : 0.0;
    }
  }
  EdgeVector edges = EdgeVector::nonnegative(n, std::move(values));
  const bool connected = is_connected(edges);
  std::string model = "sbm(blocks=" + std::to_string(block_sizes.size()) +
                      ",p_in=" + std::to_string(p_in) + ",p_out=" + std::to_string(p_out) + ")";
  return GroundTruthGraph{std::move(edges), std::move(model), seed, connected};
}

Matrix laplacian_pseudoinverse(const Matrix& laplacian, double rank_tol_factor) {
  Eigen::SelfAdjointEigenSolver<Matrix> eig(laplacian);
  if (eig.info() != Eigen::Success) {
    throw std::runtime_error("laplacian_pseudoinverse: eigendecomposition failed");
  }
  const Vector& s = eig.eigenvalues();
  const double cutoff = rank_tol_factor * std::max(s.cwiseAbs().maxCoeff(), 0.0);
  Vector inv = Vector::Zero(s.size());
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s[i] > cutoff) inv[i] = 1.0 / s[i];
  }
  return eig.eigenvectors() * inv.asDiagonal() * eig.eigenvectors().transpose();
}

SignalMatrix sample_smooth_signals(const GroundTruthGraph& graph,
                                   const SignalModelConfig& config) {
  if (config.sigma_e < 0.0) {
    throw std::invalid_argument("sample_smooth_signals: sigma_e must be >= 0");
  }
  if (config.n_signals < 1) {
    throw std::invalid_argument("sample_smooth_signals: n_signals must be >= 1");
  }
  const int n = graph.edges.n_nodes();
  const int p = config.n_signals;

  Eigen::SelfAdjointEigenSolver<Matrix> eig(laplacian_dense(graph.edges));
  if (eig.info() != Eigen::Success) {
    throw std::runtime_error("sample_smooth_signals: eigendecomposition failed");
  }
  const Vector& s = eig.eigenvalues();
  const double cutoff = 1e-8 * std::max(s.cwiseAbs().maxCoeff(), 0.0);
  Vector scale = Vector::Zero(n);
  for (int i = 0; i < n; ++i) {
    if (s[i] > cutoff) scale[i] = 1.0 / std::sqrt(s[i]);
  }

  Rng rng(config.seed, Rng::Stream::Signals);
  Matrix z(n, p);
  for (int c = 0; c < p; ++c) {
    for (int r = 0; r < n; ++r) {
      z(r, c) = rng.normal();
    }
  }
  Matrix x = eig.eigenvectors() * (scale.asDiagonal() * z);
  if (config.sigma_e > 0.0) {
    for (int c = 0; c < p; ++c) {
      for (int r = 0; r < n; ++r) {
        x(r, c) += config.sigma_e * rng.normal();
      }
    }
  }
  return SignalMatrix(std::move(x));
}

}  // namespace graphlearn
