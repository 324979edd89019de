#pragma once

#include "graphlearn/types.hpp"

namespace graphlearn {

/// Dense symmetric hollow adjacency matrix encoded by w.
Matrix adjacency_dense(const EdgeVector& w);

/// Combinatorial Laplacian L = diag(Sw) - W of the graph encoded by w.
Matrix laplacian_dense(const EdgeVector& w);

/// Squared pairwise Euclidean distances between the rows of X, as an edge
/// vector: entry (i, j) is ||row_i - row_j||_2^2. Uses the Gram identity
/// E_ij = G_ii + G_jj - 2 G_ij; cancellation below zero is clamped to 0.
EdgeVector distance_vector(const SignalMatrix& X);

/// Total variation of all signals, sum_p x_p^T L x_p, evaluated through the
/// Laplacian quadratic form (not through pairwise distances).
double total_variation(const SignalMatrix& X, const EdgeVector& w);

/// Full objective 2 w^T e + beta ||w||^2 - alpha sum_i log((Sw)_i).
/// Returns +inf when w has a negative entry or some degree (Sw)_i is not
/// strictly positive, so callers can record infeasibility uniformly.
double primal_objective(const EdgeVector& w, const EdgeVector& e, double alpha, double beta);

}  // namespace graphlearn
