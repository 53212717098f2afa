#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include <boost/rational.hpp>

namespace powerspectra {

using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

/// Dense square matrix of small non-negative integers, stored row-major.
/// Adjacency matrices hold 0/1, distance matrices 0/1/2.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, 0) {}

  std::size_t dim() const { return dim_; }

  std::int32_t operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
  std::int32_t& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }

  std::span<const std::int32_t> row(std::size_t i) const { return {data_.data() + i * dim_, dim_}; }
  std::span<std::int32_t> row(std::size_t i) { return {data_.data() + i * dim_, dim_}; }

  std::span<const std::int32_t> data() const { return data_; }

  bool is_symmetric() const;
  bool has_zero_diagonal() const;
  std::int32_t max_entry() const;
  std::int64_t row_sum(std::size_t i) const;
  std::vector<std::int64_t> row_sums() const;

  /// The principal submatrix on `vertices`, in the given order.
  SquareMatrix submatrix(std::span<const std::size_t> vertices) const;

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<std::int32_t> data_;
};

/// Dense real matrix, row-major; the working type of the eigensolvers.
class RealMatrix {
 public:
  RealMatrix() = default;
  explicit RealMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, 0.0) {}
  explicit RealMatrix(const SquareMatrix& m);

  std::size_t dim() const { return dim_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }

  std::span<double> row(std::size_t i) { return {data_.data() + i * dim_, dim_}; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * dim_, dim_}; }

  bool is_symmetric(double tol = 0.0) const;
  double trace() const;
  double frobenius_norm() const;
  double off_diagonal_norm() const;

 private:
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

/// Text format: first line is the dimension, then one line of
/// space-separated integers per row.
void write_matrix(std::ostream& out, const SquareMatrix& m);
/// Parses the format written by write_matrix. Throws DomainError on malformed input.
SquareMatrix read_matrix(std::istream& in);

}  // namespace powerspectra
