#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace qflag {

using Rational = mpq_class;

/// Dense row-major matrix over ℚ.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduces m to reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& m);

std::size_t matrix_rank(RationalMatrix m);

/// Solves A X = B exactly. A must have full column rank and the system must
/// be consistent; otherwise std::domain_error is thrown.
RationalMatrix solve_exact(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace qflag
