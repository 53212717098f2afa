#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "json.hpp"
#include "powerspectra/matrix.hpp"
#include "powerspectra/powergraph.hpp"

namespace powerspectra {

struct Tolerances {
  double jacobi = 1e-12;  // off-diagonal norm, relative to max(1, ||A||_F)
  int max_sweeps = 64;
  double power = 1e-10;  // successive Rayleigh quotients
  int max_power_iterations = 1'000'000;
  double cluster = 1e-7;  // eigenvalue multiplicity clustering
  double radius_eq = 1e-7;
  double root = 1e-10;
};

inline constexpr Tolerances kTolerances{};

struct SpectrumResult {
  std::vector<double> eigenvalues;  // non-increasing
  double radius = 0.0;
  int radius_multiplicity = 0;
  int iterations = 0;  // Jacobi sweeps or power iterations
  double residual = 0.0;
  std::vector<double> perron_vector;  // power iteration only, unit 2-norm
};

/// Ordered, disjoint, non-empty vertex blocks covering [0, dim).
class Partition {
 public:
  /// Throws DomainError unless the blocks form a partition of [0, dim).
  Partition(std::vector<std::vector<std::size_t>> blocks, std::size_t dim);

  /// Blocks of a canonical ordering, dropping empty ones.
  static Partition from_ordering(const CanonicalOrdering& ord);
  static Partition singletons(std::size_t dim);

  std::size_t size() const { return blocks_.size(); }
  std::size_t dim() const { return dim_; }
  const std::vector<std::size_t>& block(std::size_t i) const { return blocks_[i]; }
  const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }

 private:
  std::vector<std::vector<std::size_t>> blocks_;
  std::size_t dim_;
};

/// Matrix of average block row sums, kept exact.
class QuotientMatrix {
 public:
  QuotientMatrix(std::size_t size, std::vector<Rational> entries, std::vector<std::size_t> block_sizes);

  std::size_t size() const { return size_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * size_ + j]; }
  const std::vector<std::size_t>& block_sizes() const { return block_sizes_; }

  RealMatrix to_real() const;
  /// D^{1/2} Q D^{-1/2} with D = diag(block sizes). Symmetric whenever the
  /// parent matrix is, and similar to Q.
  RealMatrix symmetrized() const;

 private:
  std::size_t size_;
  std::vector<Rational> entries_;
  std::vector<std::size_t> block_sizes_;
};

/// All eigenvalues of a symmetric matrix (parallel Jacobi).
/// Throws DomainError on non-symmetric input, NumericError if Jacobi stalls.
SpectrumResult symmetric_eigenvalues(const RealMatrix& m, const Tolerances& tol = kTolerances);
SpectrumResult symmetric_eigenvalues(const SquareMatrix& m, const Tolerances& tol = kTolerances);

/// Perron root by power iteration from the all-ones vector.
SpectrumResult spectral_radius_power_iteration(const SquareMatrix& m, const Tolerances& tol = kTolerances);

QuotientMatrix quotient_matrix(const SquareMatrix& m, const Partition& pi);
bool is_equitable(const SquareMatrix& m, const Partition& pi);

/// Eigenvalues of a quotient matrix, non-increasing. 1x1, 2x2 and 3x3 use
/// the characteristic polynomial in closed form; larger ones go through
/// Jacobi on the symmetrized matrix.
std::vector<double> quotient_eigenvalues(const QuotientMatrix& q, const Tolerances& tol = kTolerances);
double quotient_radius(const QuotientMatrix& q, const Tolerances& tol = kTolerances);

/// lambda_i(big) >= mu_i(small) >= lambda_{n-m+i}(big), each up to `tol`.
/// Both lists must be non-increasing.
bool interlacing_holds(std::span<const double> big, std::span<const double> small, double tol = kTolerances.cluster);

/// |radius(m) - radius(quotient(m, pi))| <= tol.radius_eq.
/// Throws PreconditionError when `pi` is not equitable.
bool equitable_radius_equality(const SquareMatrix& m, const Partition& pi, const Tolerances& tol = kTolerances);

/// Real roots of x^2 + b x + c, non-increasing (empty when complex).
std::vector<double> quadratic_real_roots(double b, double c);
/// Real roots of x^3 + c2 x^2 + c1 x + c0 (one or three), non-increasing,
/// each polished with two Newton steps.
std::vector<double> cubic_real_roots(double c2, double c1, double c0);
double largest_cubic_root(double c2, double c1, double c0);

nlohmann::json to_json(const SpectrumResult& s);

}  // namespace powerspectra
