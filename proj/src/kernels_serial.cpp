#include <algorithm>
#include <cmath>

#include "kernels_common.hpp"
#include "powerspectra/kernels.hpp"

namespace powerspectra::kernels::serial {

namespace {

bool is_power_of(const GroupSpec& g, Element target, Element base) {
  const std::uint32_t k = elem_order(g, base);
  for (std::uint32_t m = 1; m <= k; ++m) {
    if (power(g, base, m) == target) return true;
  }
  return false;
}

}  // namespace

SquareMatrix power_graph_adjacency(const GroupSpec& g, std::span<const Element> vertices) {
  SquareMatrix adj(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      const bool edge = is_power_of(g, vertices[j], vertices[i]) || is_power_of(g, vertices[i], vertices[j]);
      adj(i, j) = adj(j, i) = edge ? 1 : 0;
    }
  }
  return adj;
}

bool diameter_at_most_two(const SquareMatrix& adj) {
  const std::size_t dim = adj.dim();
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      if (adj(i, j) != 0) continue;
      bool common = false;
      for (std::size_t k = 0; k < dim && !common; ++k) common = adj(i, k) != 0 && adj(k, j) != 0;
      if (!common) return false;
    }
  }
  return true;
}

void matvec(const SquareMatrix& m, std::span<const double> x, std::span<double> y) {
  for (std::size_t i = 0; i < m.dim(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < m.dim(); ++j) s += m(i, j) * x[j];
    y[i] = s;
  }
}

JacobiOutput jacobi_eigenvalues(RealMatrix a, double tol, int max_sweeps) {
  const std::size_t dim = a.dim();
  JacobiOutput out;
  const double threshold = tol * std::max(1.0, a.frobenius_norm());
  out.off_norm = a.off_diagonal_norm();
  while (out.off_norm >= threshold && out.sweeps < max_sweeps) {
    for (std::size_t p = 0; p + 1 < dim; ++p) {
      for (std::size_t q = p + 1; q < dim; ++q) {
        const auto [c, s] = detail::schur2(a(p, p), a(p, q), a(q, q));
        if (s == 0.0) continue;
        for (std::size_t k = 0; k < dim; ++k) {
          const double x = a(p, k);
          const double y = a(q, k);
          a(p, k) = c * x - s * y;
          a(q, k) = s * x + c * y;
        }
        for (std::size_t k = 0; k < dim; ++k) {
          const double x = a(k, p);
          const double y = a(k, q);
          a(k, p) = c * x - s * y;
          a(k, q) = s * x + c * y;
        }
        a(p, q) = a(q, p) = 0.0;
      }
    }
    ++out.sweeps;
    out.off_norm = a.off_diagonal_norm();
  }
  out.converged = out.off_norm < threshold;
  out.eigenvalues.resize(dim);
  for (std::size_t i = 0; i < dim; ++i) out.eigenvalues[i] = a(i, i);
  return out;
}

}  // namespace powerspectra::kernels::serial
