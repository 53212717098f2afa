#pragma once

// Data-parallel inner loops. The functions in `kernels` are the OpenMP
// versions used by the library; `kernels::serial` holds straightforward
// single-threaded references that the tests and benchmarks compare against.

#include <span>
#include <vector>

#include "powerspectra/group.hpp"
#include "powerspectra/matrix.hpp"

namespace powerspectra::kernels {

struct JacobiOutput {
  std::vector<double> eigenvalues;  // unsorted diagonal after convergence
  int sweeps = 0;
  double off_norm = 0.0;
  bool converged = false;
};

/// Adjacency of the power graph on `vertices` (a list of distinct elements of
/// `g`): u ~ v iff v is a power of u or u is a power of v.
SquareMatrix power_graph_adjacency(const GroupSpec& g, std::span<const Element> vertices);

/// True iff every pair of distinct vertices is adjacent or has a common neighbour.
bool diameter_at_most_two(const SquareMatrix& adj);

/// y = m x
void matvec(const SquareMatrix& m, std::span<const double> x, std::span<double> y);

/// Jacobi eigenvalue iteration with round-robin (tournament) ordering: each
/// round applies dim/2 disjoint rotations concurrently. Stops once the
/// off-diagonal Frobenius norm drops below tol * max(1, ||A||_F).
JacobiOutput jacobi_eigenvalues(RealMatrix a, double tol, int max_sweeps);

namespace serial {

SquareMatrix power_graph_adjacency(const GroupSpec& g, std::span<const Element> vertices);
bool diameter_at_most_two(const SquareMatrix& adj);
void matvec(const SquareMatrix& m, std::span<const double> x, std::span<double> y);
/// Classical cyclic-by-row Jacobi.
JacobiOutput jacobi_eigenvalues(RealMatrix a, double tol, int max_sweeps);

}  // namespace serial

}  // namespace powerspectra::kernels
