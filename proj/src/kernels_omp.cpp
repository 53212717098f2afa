#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>

#include "kernels_common.hpp"
#include "powerspectra/kernels.hpp"

namespace powerspectra::kernels {

SquareMatrix power_graph_adjacency(const GroupSpec& g, std::span<const Element> vertices) {
  const auto dim = static_cast<std::int64_t>(vertices.size());
  constexpr std::uint32_t kAbsent = ~std::uint32_t{0};
  std::vector<std::uint32_t> position(g.order(), kAbsent);
  for (std::int64_t i = 0; i < dim; ++i) {
    check_element(g, vertices[i]);
    position[vertices[i].index] = static_cast<std::uint32_t>(i);
  }

  // member(i, j) = 1 iff vertices[j] lies in <vertices[i]>.
  SquareMatrix member(vertices.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t i = 0; i < dim; ++i) {
    const Element u = vertices[i];
    Element x = u;
    do {
      if (position[x.index] != kAbsent) member(i, position[x.index]) = 1;
      x = multiply(g, x, u);
    } while (x != u);
  }

  SquareMatrix adj(vertices.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < dim; ++i) {
    for (std::int64_t j = 0; j < dim; ++j) {
      if (i != j) adj(i, j) = (member(i, j) | member(j, i)) ? 1 : 0;
    }
  }
  return adj;
}

bool diameter_at_most_two(const SquareMatrix& adj) {
  const std::size_t dim = adj.dim();
  const std::size_t words = (dim + 63) / 64;
  std::vector<std::uint64_t> bits(dim * words, 0);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      if (adj(i, j) != 0) bits[i * words + j / 64] |= std::uint64_t{1} << (j % 64);
    }
  }

  bool ok = true;
  const auto n = static_cast<std::int64_t>(dim);
#pragma omp parallel for schedule(dynamic, 8) reduction(&& : ok)
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < dim && ok; ++j) {
      if (adj(i, j) != 0) continue;
      bool common = false;
      for (std::size_t w = 0; w < words && !common; ++w) {
        common = (bits[i * words + w] & bits[j * words + w]) != 0;
      }
      ok = ok && common;
    }
  }
  return ok;
}

void matvec(const SquareMatrix& m, std::span<const double> x, std::span<double> y) {
  const auto n = static_cast<std::int64_t>(m.dim());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    double s = 0.0;
    const auto r = m.row(i);
    for (std::size_t j = 0; j < r.size(); ++j) s += r[j] * x[j];
    y[i] = s;
  }
}

namespace {

// Round r of the circle method on m (even) players: player m-1 is fixed and
// the others rotate. Pairs touching a padding slot (>= dim) are dropped.
std::vector<std::pair<std::size_t, std::size_t>> tournament_round(std::size_t m, std::size_t round,
                                                                  std::size_t dim) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(m / 2);
  const std::size_t k = m - 1;
  auto slot = [&](std::size_t pos) { return pos == k ? k : (pos + round) % k; };
  for (std::size_t t = 0; t < m / 2; ++t) {
    std::size_t p = slot(t);
    std::size_t q = slot(k - t);
    if (p > q) std::swap(p, q);
    if (q < dim) pairs.emplace_back(p, q);
  }
  return pairs;
}

double parallel_off_norm(const RealMatrix& a) {
  const auto n = static_cast<std::int64_t>(a.dim());
  double s = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : s)
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = 0; j < n; ++j) {
      if (i != j) s += a(i, j) * a(i, j);
    }
  }
  return std::sqrt(s);
}

}  // namespace

JacobiOutput jacobi_eigenvalues(RealMatrix a, double tol, int max_sweeps) {
  const std::size_t dim = a.dim();
  JacobiOutput out;
  const double threshold = tol * std::max(1.0, a.frobenius_norm());
  const std::size_t m = dim + (dim % 2);
  std::vector<detail::Rotation> rot(m / 2);

  out.off_norm = parallel_off_norm(a);
  while (out.off_norm >= threshold && out.sweeps < max_sweeps && dim > 1) {
    for (std::size_t round = 0; round + 1 < m; ++round) {
      const auto pairs = tournament_round(m, round, dim);
      const auto np = static_cast<std::int64_t>(pairs.size());
      for (std::int64_t t = 0; t < np; ++t) {
        const auto [p, q] = pairs[t];
        rot[t] = detail::schur2(a(p, p), a(p, q), a(q, q));
      }
      // Rows: A <- J^T A. Each pair touches only its own two rows.
#pragma omp parallel for schedule(static)
      for (std::int64_t t = 0; t < np; ++t) {
        const auto [p, q] = pairs[t];
        const auto [c, s] = rot[t];
        if (s == 0.0) continue;
        auto rp = a.row(p);
        auto rq = a.row(q);
        for (std::size_t k = 0; k < dim; ++k) {
          const double x = rp[k];
          const double y = rq[k];
          rp[k] = c * x - s * y;
          rq[k] = s * x + c * y;
        }
      }
      // Columns: A <- A J, row by row.
      const auto n = static_cast<std::int64_t>(dim);
#pragma omp parallel for schedule(static)
      for (std::int64_t i = 0; i < n; ++i) {
        auto ri = a.row(i);
        for (std::int64_t t = 0; t < np; ++t) {
          const auto [p, q] = pairs[t];
          const auto [c, s] = rot[t];
          if (s == 0.0) continue;
          const double x = ri[p];
          const double y = ri[q];
          ri[p] = c * x - s * y;
          ri[q] = s * x + c * y;
        }
      }
      for (std::int64_t t = 0; t < np; ++t) {
        if (rot[t].s == 0.0) continue;
        const auto [p, q] = pairs[t];
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
    ++out.sweeps;
    out.off_norm = parallel_off_norm(a);
  }
  out.converged = out.off_norm < threshold || dim <= 1;
  out.eigenvalues.resize(dim);
  for (std::size_t i = 0; i < dim; ++i) out.eigenvalues[i] = a(i, i);
  return out;
}

}  // namespace powerspectra::kernels
