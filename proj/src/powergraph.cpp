#include "powerspectra/powergraph.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <numeric>

#include <fmt/format.h>

#include "powerspectra/errors.hpp"
#include "powerspectra/kernels.hpp"

namespace powerspectra {

namespace {

constexpr std::size_t kDefaultMaxOrder = 4096;

SubsetStats row_sum_stats(const SquareMatrix& m, std::span<const std::size_t> subset) {
  if (subset.empty()) throw DegenerateSubsetError("statistics over an empty vertex subset");
  SubsetStats st;
  st.subset.assign(subset.begin(), subset.end());
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::int64_t total = 0;
  for (std::size_t k = 0; k < subset.size(); ++k) {
    if (subset[k] >= m.dim()) throw DomainError(fmt::format("vertex {} out of range (dim {})", subset[k], m.dim()));
    const auto s = m.row_sum(subset[k]);
    lo = k == 0 ? s : std::min(lo, s);
    hi = k == 0 ? s : std::max(hi, s);
    total += s;
  }
  st.min = Rational(lo);
  st.max = Rational(hi);
  st.avg = Rational(total, static_cast<std::int64_t>(subset.size()));
  return st;
}

// Cyclic-group vertex list: e, generators, then the rest by index.
std::vector<Element> cyclic_order(std::uint32_t n) {
  std::vector<Element> v{Element{0}};
  const auto gens = cyclic_generators(n);
  v.insert(v.end(), gens.begin(), gens.end());
  for (std::uint32_t k = 1; k < n; ++k) {
    if (std::gcd(k, n) != 1) v.push_back(Element{k});
  }
  return v;
}

// Rotation part of the dicyclic order: e, a^n, then the other a^i by index.
std::vector<Element> dicyclic_rotation_order(std::uint32_t n) {
  std::vector<Element> v{Element{0}, Element{n}};
  for (std::uint32_t i = 1; i < 2 * n; ++i) {
    if (i != n) v.push_back(Element{i});
  }
  return v;
}

void place(SquareMatrix& dst, const SquareMatrix& src, std::size_t offset) {
  for (std::size_t i = 0; i < src.dim(); ++i) {
    for (std::size_t j = 0; j < src.dim(); ++j) dst(offset + i, offset + j) = src(i, j);
  }
}

}  // namespace

std::size_t max_order() {
  const char* env = std::getenv("POWER_SPECTRA_MAX_ORDER");
  if (env == nullptr || *env == '\0') return kDefaultMaxOrder;
  std::size_t value = 0;
  const auto* end = env + std::strlen(env);
  const auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc{} || ptr != end || value == 0) return kDefaultMaxOrder;
  return value;
}

void check_order_guard(std::size_t order) {
  if (order > max_order()) {
    throw DomainError(fmt::format(
        "group order {} exceeds the dense-matrix limit {} (set POWER_SPECTRA_MAX_ORDER to raise it)", order,
        max_order()));
  }
}

std::vector<std::size_t> CanonicalOrdering::block(std::size_t b) const {
  const auto first = std::accumulate(block_sizes.begin(), block_sizes.begin() + static_cast<std::ptrdiff_t>(b),
                                     std::size_t{0});
  std::vector<std::size_t> out(block_sizes.at(b));
  std::iota(out.begin(), out.end(), first);
  return out;
}

CanonicalOrdering canonical_ordering(const GroupSpec& g) {
  CanonicalOrdering ord;
  const std::uint32_t r = g.rotation_order();
  switch (g.family()) {
    case Family::Cyclic: {
      ord.vertices = cyclic_order(r);
      const std::size_t l = euler_phi(r) + 1;
      ord.block_sizes = {l, r - l};
      break;
    }
    case Family::Dihedral: {
      for (std::uint32_t i = 0; i < 2 * r; ++i) ord.vertices.push_back(Element{i});
      ord.block_sizes = {r, r};
      break;
    }
    case Family::Dicyclic: {
      ord.vertices = dicyclic_rotation_order(g.n());
      for (std::uint32_t i = 0; i < r; ++i) ord.vertices.push_back(g.reflection(i));
      ord.block_sizes = {r, r};
      break;
    }
    case Family::SemiprimeCyclic: {
      const std::uint32_t p = g.p();
      const std::uint32_t q = g.q();
      ord.vertices.push_back(Element{0});
      const auto gens = cyclic_generators(r);
      ord.vertices.insert(ord.vertices.end(), gens.begin(), gens.end());
      for (std::uint32_t k = 1; k < q; ++k) ord.vertices.push_back(Element{k * p});
      for (std::uint32_t k = 1; k < p; ++k) ord.vertices.push_back(Element{k * q});
      ord.block_sizes = {gens.size() + 1, q - 1, p - 1};
      break;
    }
  }
  // Empty trailing blocks (e.g. V2 of C_p) are kept so block indices stay fixed.
  return ord;
}

SquareMatrix build_definitional(const GroupSpec& g) {
  check_order_guard(g.order());
  const auto ord = canonical_ordering(g);
  return kernels::power_graph_adjacency(g, ord.vertices);
}

SquareMatrix build_structural_cyclic(std::uint32_t n) {
  const auto g = GroupSpec::cyclic(n);
  check_order_guard(g.order());
  const auto ord = canonical_ordering(g);
  const std::size_t l = ord.block_sizes[0];
  SquareMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && (i < l || j < l)) a(i, j) = 1;
    }
  }
  const std::span<const Element> v2(ord.vertices.begin() + static_cast<std::ptrdiff_t>(l), ord.vertices.end());
  if (!v2.empty()) place(a, kernels::power_graph_adjacency(g, v2), l);
  return a;
}

SquareMatrix build_structural_dihedral(std::uint32_t n) {
  const auto g = GroupSpec::dihedral(n);
  check_order_guard(g.order());
  SquareMatrix a(2 * n);
  std::vector<Element> rotations(n);
  for (std::uint32_t i = 0; i < n; ++i) rotations[i] = Element{i};
  place(a, kernels::power_graph_adjacency(GroupSpec::cyclic(n), rotations), 0);
  for (std::size_t j = n; j < 2 * n; ++j) a(0, j) = a(j, 0) = 1;
  return a;
}

SquareMatrix build_structural_dicyclic(std::uint32_t n) {
  const auto g = GroupSpec::dicyclic(n);
  check_order_guard(g.order());
  const std::uint32_t m = 2 * n;
  SquareMatrix a(4 * n);
  const auto core = GroupSpec::cyclic(m);
  place(a, kernels::power_graph_adjacency(core, dicyclic_rotation_order(n)), 0);
  for (std::size_t j = m; j < 2 * m; ++j) {
    a(0, j) = a(j, 0) = 1;
    a(1, j) = a(j, 1) = 1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    a(m + i, m + n + i) = a(m + n + i, m + i) = 1;
  }
  return a;
}

SquareMatrix build_structural_semiprime(std::uint32_t p, std::uint32_t q) {
  const auto g = GroupSpec::semiprime(p, q);
  check_order_guard(g.order());
  const auto ord = canonical_ordering(g);
  const std::size_t l = ord.block_sizes[0];
  const std::size_t v2_end = l + ord.block_sizes[1];
  auto block_of = [&](std::size_t i) { return i < l ? 0 : (i < v2_end ? 1 : 2); };
  SquareMatrix a(g.order());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (i == j) continue;
      const int bi = block_of(i);
      const int bj = block_of(j);
      a(i, j) = (bi == 0 || bj == 0 || bi == bj) ? 1 : 0;
    }
  }
  return a;
}

SquareMatrix build_structural(const GroupSpec& g) {
  switch (g.family()) {
    case Family::Cyclic:
      return build_structural_cyclic(g.n());
    case Family::Dihedral:
      return build_structural_dihedral(g.n());
    case Family::Dicyclic:
      return build_structural_dicyclic(g.n());
    case Family::SemiprimeCyclic:
      return build_structural_semiprime(g.p(), g.q());
  }
  return {};
}

SquareMatrix distance_matrix(const SquareMatrix& adj) {
  if (!adj.is_symmetric() || !adj.has_zero_diagonal() || adj.max_entry() > 1) {
    throw StructureError("distance_matrix expects a symmetric 0/1 adjacency matrix with zero diagonal");
  }
  if (!kernels::diameter_at_most_two(adj)) {
    throw StructureError("graph is disconnected or has diameter > 2; not a power graph");
  }
  SquareMatrix d(adj.dim());
  for (std::size_t i = 0; i < adj.dim(); ++i) {
    for (std::size_t j = 0; j < adj.dim(); ++j) {
      if (i != j) d(i, j) = 2 - adj(i, j);
    }
  }
  return d;
}

SubsetStats subset_degree_stats(const SquareMatrix& adj, std::span<const std::size_t> subset) {
  return row_sum_stats(adj, subset);
}

SubsetStats subset_transmission_stats(const SquareMatrix& dist, std::span<const std::size_t> subset) {
  return row_sum_stats(dist, subset);
}

std::vector<std::size_t> all_vertices(std::size_t dim) {
  std::vector<std::size_t> v(dim);
  std::iota(v.begin(), v.end(), std::size_t{0});
  return v;
}

}  // namespace powerspectra
