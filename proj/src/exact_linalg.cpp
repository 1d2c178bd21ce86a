#include "qflag/exact_linalg.hpp"

#include <stdexcept>
#include <utility>

namespace qflag {

std::vector<std::size_t> row_reduce(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    }
    const Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t matrix_rank(RationalMatrix m) { return row_reduce(m).size(); }

RationalMatrix solve_exact(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve_exact: row count mismatch");
  const std::size_t n = a.cols();
  RationalMatrix aug(a.rows(), n + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) aug(r, n + c) = b(r, c);
  }
  const auto pivots = row_reduce(aug);
  std::size_t coefficient_pivots = 0;
  for (auto p : pivots) {
    if (p >= n) throw std::domain_error("solve_exact: inconsistent system");
    ++coefficient_pivots;
  }
  if (coefficient_pivots != n) throw std::domain_error("solve_exact: matrix lacks full column rank");
  RationalMatrix x(n, b.cols());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < b.cols(); ++c) x(i, c) = aug(i, n + c);
  }
  return x;
}

}  // namespace qflag
