#pragma once

#include "graphlearn/types.hpp"

namespace graphlearn {

// The degree operator S maps the m edge weights to the N nodal degrees,
// d = S w. It is never materialized: both directions are O(N^2) loops over
// the canonical pair ordering.

/// d = S w, with d_i the weighted degree of node i.
DualPoint degree_apply(const EdgeVector& w);

/// S^T v, whose entry for pair (i, j) is v_i + v_j.
EdgeVector degree_adjoint(const DualPoint& v);

/// Operator 2-norm of S in closed form, sqrt(2(N-1)). Throws for N < 2.
double spectral_norm_S(int n_nodes);

namespace detail {

// Allocation-free kernels shared by the solver hot loop and the wrappers
// above. `out` is resized as needed.
void degree_apply_into(const Vector& w, int n_nodes, Vector& out);
void degree_adjoint_into(const Vector& v, int n_nodes, Vector& out);

}  // namespace detail

}  // namespace graphlearn
