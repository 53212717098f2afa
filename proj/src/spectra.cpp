#include "powerspectra/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>

#include <fmt/format.h>

#include "powerspectra/errors.hpp"
#include "powerspectra/kernels.hpp"

namespace powerspectra {

namespace {

void sort_descending(std::vector<double>& v) { std::sort(v.begin(), v.end(), std::greater<>()); }

int count_cluster(const std::vector<double>& eigs, double value, double tol) {
  return static_cast<int>(std::count_if(eigs.begin(), eigs.end(), [&](double x) { return std::abs(x - value) <= tol; }));
}

double eval_cubic(double c2, double c1, double c0, double x) { return ((x + c2) * x + c1) * x + c0; }

double newton_polish(double c2, double c1, double c0, double x) {
  for (int step = 0; step < 2; ++step) {
    const double f = eval_cubic(c2, c1, c0, x);
    const double df = (3.0 * x + 2.0 * c2) * x + c1;
    if (df == 0.0 || !std::isfinite(f / df)) break;
    x -= f / df;
  }
  return x;
}

}  // namespace

Partition::Partition(std::vector<std::vector<std::size_t>> blocks, std::size_t dim)
    : blocks_(std::move(blocks)), dim_(dim) {
  std::vector<char> seen(dim, 0);
  std::size_t covered = 0;
  for (const auto& b : blocks_) {
    if (b.empty()) throw DomainError("partition has an empty block");
    for (auto v : b) {
      if (v >= dim) throw DomainError(fmt::format("partition vertex {} out of range (dim {})", v, dim));
      if (seen[v]) throw DomainError(fmt::format("partition vertex {} appears twice", v));
      seen[v] = 1;
      ++covered;
    }
  }
  if (covered != dim) throw DomainError("partition does not cover every vertex");
}

Partition Partition::from_ordering(const CanonicalOrdering& ord) {
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t b = 0; b < ord.block_sizes.size(); ++b) {
    if (ord.block_sizes[b] > 0) blocks.push_back(ord.block(b));
  }
  return Partition(std::move(blocks), ord.size());
}

Partition Partition::singletons(std::size_t dim) {
  std::vector<std::vector<std::size_t>> blocks(dim);
  for (std::size_t i = 0; i < dim; ++i) blocks[i] = {i};
  return Partition(std::move(blocks), dim);
}

QuotientMatrix::QuotientMatrix(std::size_t size, std::vector<Rational> entries, std::vector<std::size_t> block_sizes)
    : size_(size), entries_(std::move(entries)), block_sizes_(std::move(block_sizes)) {}

RealMatrix QuotientMatrix::to_real() const {
  RealMatrix r(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    for (std::size_t j = 0; j < size_; ++j) r(i, j) = to_double((*this)(i, j));
  }
  return r;
}

RealMatrix QuotientMatrix::symmetrized() const {
  RealMatrix r(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    for (std::size_t j = 0; j < size_; ++j) {
      const double scale = std::sqrt(static_cast<double>(block_sizes_[i]) / static_cast<double>(block_sizes_[j]));
      r(i, j) = to_double((*this)(i, j)) * scale;
    }
  }
  return r;
}

SpectrumResult symmetric_eigenvalues(const RealMatrix& m, const Tolerances& tol) {
  if (!m.is_symmetric(1e-12 * std::max(1.0, m.frobenius_norm()))) {
    throw DomainError("symmetric_eigenvalues: matrix is not symmetric");
  }
  if (m.dim() == 0) throw DomainError("symmetric_eigenvalues: empty matrix");
  auto jac = kernels::jacobi_eigenvalues(m, tol.jacobi, tol.max_sweeps);
  if (!jac.converged) {
    throw NumericError(fmt::format("Jacobi did not converge in {} sweeps (off-diagonal norm {:.3e})", tol.max_sweeps,
                                   jac.off_norm));
  }
  SpectrumResult out;
  out.eigenvalues = std::move(jac.eigenvalues);
  sort_descending(out.eigenvalues);
  out.radius = out.eigenvalues.front();
  out.radius_multiplicity = count_cluster(out.eigenvalues, out.radius, tol.cluster);
  out.iterations = jac.sweeps;
  out.residual = jac.off_norm;
  return out;
}

SpectrumResult symmetric_eigenvalues(const SquareMatrix& m, const Tolerances& tol) {
  if (!m.is_symmetric()) throw DomainError("symmetric_eigenvalues: matrix is not symmetric");
  return symmetric_eigenvalues(RealMatrix(m), tol);
}

SpectrumResult spectral_radius_power_iteration(const SquareMatrix& m, const Tolerances& tol) {
  const std::size_t n = m.dim();
  if (n == 0) throw DomainError("power iteration: empty matrix");
  const auto entries = m.data();
  if (std::any_of(entries.begin(), entries.end(), [](auto v) { return v < 0; })) {
    throw DomainError("power iteration needs a non-negative matrix");
  }
  if (std::all_of(entries.begin(), entries.end(), [](auto v) { return v == 0; })) {
    throw DomainError("power iteration: zero matrix has no Perron root");
  }

  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> y(n);
  double lambda = 0.0;
  double prev = 0.0;
  double residual = 0.0;
  for (int it = 1; it <= tol.max_power_iterations; ++it) {
    kernels::matvec(m, x, y);
    lambda = std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
    double res2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) res2 += (y[i] - lambda * x[i]) * (y[i] - lambda * x[i]);
    residual = std::sqrt(res2);
    const double norm = std::sqrt(std::inner_product(y.begin(), y.end(), y.begin(), 0.0));
    if (norm == 0.0) throw NumericError("power iteration collapsed to the zero vector");
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
    // The Rayleigh quotient error is bounded by residual^2 / gap, so a small
    // quotient change alone is not trusted until the residual is small too.
    if (it > 1 && std::abs(lambda - prev) < tol.power && residual < std::sqrt(tol.power) * std::max(1.0, lambda)) {
      SpectrumResult out;
      out.radius = lambda;
      out.eigenvalues = {lambda};
      out.radius_multiplicity = 1;
      out.iterations = it;
      out.residual = residual;
      out.perron_vector = std::move(x);
      return out;
    }
    prev = lambda;
  }
  throw NumericError(fmt::format("power iteration did not converge in {} iterations", tol.max_power_iterations));
}

QuotientMatrix quotient_matrix(const SquareMatrix& m, const Partition& pi) {
  if (pi.dim() != m.dim()) {
    throw DomainError(fmt::format("partition covers {} vertices but matrix has dim {}", pi.dim(), m.dim()));
  }
  const std::size_t k = pi.size();
  std::vector<Rational> entries(k * k);
  std::vector<std::size_t> sizes(k);
  for (std::size_t i = 0; i < k; ++i) {
    sizes[i] = pi.block(i).size();
    for (std::size_t j = 0; j < k; ++j) {
      std::int64_t total = 0;
      for (auto r : pi.block(i)) {
        for (auto c : pi.block(j)) total += m(r, c);
      }
      entries[i * k + j] = Rational(total, static_cast<std::int64_t>(sizes[i]));
    }
  }
  return QuotientMatrix(k, std::move(entries), std::move(sizes));
}

bool is_equitable(const SquareMatrix& m, const Partition& pi) {
  if (pi.dim() != m.dim()) return false;
  for (const auto& bi : pi.blocks()) {
    for (const auto& bj : pi.blocks()) {
      std::int64_t first = -1;
      for (auto r : bi) {
        std::int64_t s = 0;
        for (auto c : bj) s += m(r, c);
        if (first < 0) first = s;
        if (s != first) return false;
      }
    }
  }
  return true;
}

std::vector<double> quotient_eigenvalues(const QuotientMatrix& q, const Tolerances& tol) {
  std::vector<double> eigs;
  switch (q.size()) {
    case 1:
      eigs = {to_double(q(0, 0))};
      break;
    case 2: {
      const Rational tr = q(0, 0) + q(1, 1);
      const Rational det = q(0, 0) * q(1, 1) - q(0, 1) * q(1, 0);
      eigs = quadratic_real_roots(-to_double(tr), to_double(det));
      if (eigs.empty()) throw NumericError("2x2 quotient has complex eigenvalues");
      if (eigs.size() == 1) eigs.push_back(eigs.front());
      break;
    }
    case 3: {
      const Rational tr = q(0, 0) + q(1, 1) + q(2, 2);
      const Rational minors = q(0, 0) * q(1, 1) - q(0, 1) * q(1, 0) + q(0, 0) * q(2, 2) - q(0, 2) * q(2, 0) +
                              q(1, 1) * q(2, 2) - q(1, 2) * q(2, 1);
      const Rational det = q(0, 0) * (q(1, 1) * q(2, 2) - q(1, 2) * q(2, 1)) -
                           q(0, 1) * (q(1, 0) * q(2, 2) - q(1, 2) * q(2, 0)) +
                           q(0, 2) * (q(1, 0) * q(2, 1) - q(1, 1) * q(2, 0));
      eigs = cubic_real_roots(-to_double(tr), to_double(minors), -to_double(det));
      // A quotient of a symmetric matrix is similar to a symmetric one, so a
      // single real root only appears when a double root was lost to rounding.
      if (eigs.size() != 3) eigs = symmetric_eigenvalues(q.symmetrized(), tol).eigenvalues;
      break;
    }
    default:
      eigs = symmetric_eigenvalues(q.symmetrized(), tol).eigenvalues;
      break;
  }
  sort_descending(eigs);
  return eigs;
}

double quotient_radius(const QuotientMatrix& q, const Tolerances& tol) { return quotient_eigenvalues(q, tol).front(); }

bool interlacing_holds(std::span<const double> big, std::span<const double> small, double tol) {
  const std::size_t n = big.size();
  const std::size_t m = small.size();
  if (m == 0 || m > n) throw DomainError(fmt::format("interlacing needs 0 < m <= n, got m={} n={}", m, n));
  for (std::size_t i = 0; i < m; ++i) {
    if (small[i] > big[i] + tol) return false;
    if (small[i] < big[n - m + i] - tol) return false;
  }
  return true;
}

bool equitable_radius_equality(const SquareMatrix& m, const Partition& pi, const Tolerances& tol) {
  if (!is_equitable(m, pi)) throw PreconditionError("equitable_radius_equality: partition is not equitable");
  const double full = symmetric_eigenvalues(m, tol).radius;
  const double quot = quotient_radius(quotient_matrix(m, pi), tol);
  return std::abs(full - quot) <= tol.radius_eq;
}

std::vector<double> quadratic_real_roots(double b, double c) {
  const double disc = b * b - 4.0 * c;
  const double scale = std::max(1.0, b * b);
  if (disc < -1e-12 * scale) return {};
  const double root_disc = std::sqrt(std::max(0.0, disc));
  // Stable form: avoid cancellation in the smaller-magnitude root.
  const double t = -0.5 * (b + std::copysign(root_disc, b));
  if (t == 0.0) return {0.0, 0.0};
  std::vector<double> r{t, c / t};
  sort_descending(r);
  return r;
}

std::vector<double> cubic_real_roots(double c2, double c1, double c0) {
  // Depressed cubic t^3 + P t + Q with x = t - c2/3.
  const double shift = c2 / 3.0;
  const double P = c1 - c2 * c2 / 3.0;
  const double Q = 2.0 * c2 * c2 * c2 / 27.0 - c2 * c1 / 3.0 + c0;
  std::vector<double> roots;
  const double disc = Q * Q / 4.0 + P * P * P / 27.0;
  if (P < 0.0 && disc <= 0.0) {
    const double m = 2.0 * std::sqrt(-P / 3.0);
    const double arg = std::clamp(3.0 * Q / (P * m), -1.0, 1.0);
    const double theta = std::acos(arg) / 3.0;
    for (int k = 0; k < 3; ++k) roots.push_back(m * std::cos(theta - 2.0 * std::numbers::pi * k / 3.0) - shift);
  } else {
    const double s = std::sqrt(std::max(0.0, disc));
    roots.push_back(std::cbrt(-Q / 2.0 + s) + std::cbrt(-Q / 2.0 - s) - shift);
  }
  for (double& r : roots) r = newton_polish(c2, c1, c0, r);
  sort_descending(roots);
  return roots;
}

double largest_cubic_root(double c2, double c1, double c0) { return cubic_real_roots(c2, c1, c0).front(); }

nlohmann::json to_json(const SpectrumResult& s) {
  return nlohmann::json{{"eigenvalues", s.eigenvalues}, {"radius", s.radius}, {"multiplicity", s.radius_multiplicity}};
}

}  // namespace powerspectra
