#pragma once

#include <span>
#include <vector>

#include "augraph/matrix.hpp"

namespace augraph {

double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> a);

// Raw cosine; returns 0.0 when either norm is zero. Call sites that must
// reject zero vectors check norms themselves.
double cosine_similarity(std::span<const double> a, std::span<const double> b);

// Eigenvalues of a symmetric matrix by the cyclic Jacobi method, sorted
// descending. Convergence: off-diagonal Frobenius norm < 1e-10, hard cap of
// 100 sweeps (std::runtime_error beyond that). The input is consumed as
// scratch space.
std::vector<double> jacobi_eigenvalues(Matrix a);

}  // namespace augraph
