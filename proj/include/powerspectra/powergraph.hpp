#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "powerspectra/group.hpp"
#include "powerspectra/matrix.hpp"

namespace powerspectra {

/// Largest group order the dense builders accept; 4096 unless the
/// POWER_SPECTRA_MAX_ORDER environment variable overrides it.
std::size_t max_order();
/// Throws DomainError when `order` exceeds max_order().
void check_order_guard(std::size_t order);

/// The fixed vertex order used by every builder for a family, split into
/// the blocks V1, V2 (and V3 for Z_pq) that the block-matrix forms use.
///
///  - Cyclic:    V1 = {e, generators}, V2 = remaining elements by index.
///  - Dihedral:  V1 = {e, a, ..., a^{n-1}}, V2 = {b, ab, ..., a^{n-1}b}.
///  - Dicyclic:  V1 = {e, a^n, a, ..., a^{n-1}, a^{n+1}, ..., a^{2n-1}},
///               V2 = {b, ab, ..., a^{2n-1}b}.
///  - Semiprime: V1 = {e, generators}, V2 = {p, 2p, ..., (q-1)p},
///               V3 = {q, 2q, ..., (p-1)q}.
struct CanonicalOrdering {
  std::vector<Element> vertices;
  std::vector<std::size_t> block_sizes;

  std::size_t size() const { return vertices.size(); }
  /// Positions [first, first + block_sizes[b]) of block b.
  std::vector<std::size_t> block(std::size_t b) const;
};

CanonicalOrdering canonical_ordering(const GroupSpec& g);

/// Exact min / max / mean of a list of row sums.
struct SubsetStats {
  Rational min;
  Rational max;
  Rational avg;
  std::vector<std::size_t> subset;
};

/// Adjacency matrix from the definition (u ~ v iff one lies in the cyclic
/// subgroup generated by the other), in canonical order.
SquareMatrix build_definitional(const GroupSpec& g);

/// [[J - I, J], [J, A(P(V2))]] with l = phi(n) + 1 leading vertices.
SquareMatrix build_structural_cyclic(std::uint32_t n);
/// [[A(P(C_n)), E], [E^T, O]]: only the identity row of E is non-zero.
SquareMatrix build_structural_dihedral(std::uint32_t n);
/// [[A(P(C_2n)), F], [F^T, P]]: e and a^n see every a^i b, and a^i b is
/// paired with a^{n+i} b.
SquareMatrix build_structural_dicyclic(std::uint32_t n);
/// Three-block form with complete V2 and V3 blocks and no V2-V3 edges.
SquareMatrix build_structural_semiprime(std::uint32_t p, std::uint32_t q);
/// Dispatches to the block-form builder for the family of `g`.
SquareMatrix build_structural(const GroupSpec& g);

/// D = 2(J - I) - A after checking that the graph has diameter at most 2.
/// Throws StructureError otherwise.
SquareMatrix distance_matrix(const SquareMatrix& adj);

/// Row-sum statistics over `subset`, using full rows of the matrix.
/// Throws DegenerateSubsetError for an empty subset.
SubsetStats subset_degree_stats(const SquareMatrix& adj, std::span<const std::size_t> subset);
SubsetStats subset_transmission_stats(const SquareMatrix& dist, std::span<const std::size_t> subset);

std::vector<std::size_t> all_vertices(std::size_t dim);

}  // namespace powerspectra
