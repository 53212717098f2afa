#include "powerspectra/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <string>

#include <fmt/format.h>

#include "powerspectra/errors.hpp"

namespace powerspectra {

bool SquareMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

bool SquareMatrix::has_zero_diagonal() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    if ((*this)(i, i) != 0) return false;
  }
  return true;
}

std::int32_t SquareMatrix::max_entry() const {
  return data_.empty() ? 0 : *std::max_element(data_.begin(), data_.end());
}

std::int64_t SquareMatrix::row_sum(std::size_t i) const {
  std::int64_t s = 0;
  for (auto v : row(i)) s += v;
  return s;
}

std::vector<std::int64_t> SquareMatrix::row_sums() const {
  std::vector<std::int64_t> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) out[i] = row_sum(i);
  return out;
}

SquareMatrix SquareMatrix::submatrix(std::span<const std::size_t> vertices) const {
  SquareMatrix out(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = 0; j < vertices.size(); ++j) out(i, j) = (*this)(vertices[i], vertices[j]);
  }
  return out;
}

RealMatrix::RealMatrix(const SquareMatrix& m) : dim_(m.dim()), data_(m.data().begin(), m.data().end()) {}

bool RealMatrix::is_symmetric(double tol) const {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
    }
  }
  return true;
}

double RealMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double RealMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double v : data_) s += v * v;
  return std::sqrt(s);
}

double RealMatrix::off_diagonal_norm() const {
  double s = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      if (i != j) s += (*this)(i, j) * (*this)(i, j);
    }
  }
  return std::sqrt(s);
}

void write_matrix(std::ostream& out, const SquareMatrix& m) {
  out << m.dim() << '\n';
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (j) out << ' ';
      out << m(i, j);
    }
    out << '\n';
  }
}

SquareMatrix read_matrix(std::istream& in) {
  long long dim = 0;
  if (!(in >> dim) || dim <= 0) throw DomainError("matrix text: expected a positive dimension on the first line");
  SquareMatrix m(static_cast<std::size_t>(dim));
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      long long v = 0;
      if (!(in >> v)) throw DomainError(fmt::format("matrix text: missing entry ({}, {})", i, j));
      if (v < 0) throw DomainError(fmt::format("matrix text: negative entry at ({}, {})", i, j));
      m(i, j) = static_cast<std::int32_t>(v);
    }
  }
  std::string extra;
  if (in >> extra) throw DomainError("matrix text: trailing data after the last row");
  return m;
}

}  // namespace powerspectra
