#include "betticone/exact_matrix.hpp"

namespace betticone {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

std::size_t ExactMatrix::rank() const {
  if (rows_ == 0 || cols_ == 0) return 0;

  // Clear denominators rowwise (rank-preserving), then run Bareiss:
  // every intermediate entry stays an integer and is a minor of the
  // original matrix, which keeps growth polynomial.
  std::vector<std::vector<Int>> m(rows_, std::vector<Int>(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    Int row_lcm = 1;
    for (std::size_t c = 0; c < cols_; ++c) {
      row_lcm = boost::multiprecision::lcm(
          row_lcm, boost::multiprecision::denominator(at(r, c)));
    }
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational cleared = at(r, c) * row_lcm;
      m[r][c] = boost::multiprecision::numerator(cleared);
    }
  }

  std::size_t rank = 0;
  Int previous_pivot = 1;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t pivot_row = rank;
    while (pivot_row < rows_ && m[pivot_row][col] == 0) ++pivot_row;
    if (pivot_row == rows_) continue;
    std::swap(m[rank], m[pivot_row]);

    const Int pivot = m[rank][col];
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      for (std::size_t c = col + 1; c < cols_; ++c) {
        m[r][c] = (m[r][c] * pivot - m[r][col] * m[rank][c]) / previous_pivot;
      }
      m[r][col] = 0;
    }
    previous_pivot = pivot;
    ++rank;
  }
  return rank;
}

std::size_t ExactMatrix::rank_gauss() const {
  if (rows_ == 0 || cols_ == 0) return 0;

  std::vector<std::vector<Rational>> m(rows_, std::vector<Rational>(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m[r][c] = at(r, c);
  }

  std::size_t rank = 0;
  for (std::size_t step = 0; step < cols_ && rank < rows_; ++step) {
    const std::size_t col = cols_ - 1 - step;  // opposite column order
    std::size_t pivot_row = rows_;
    Rational best = 0;
    for (std::size_t r = rank; r < rows_; ++r) {
      const Rational magnitude = boost::multiprecision::abs(m[r][col]);
      if (magnitude > best) {
        best = magnitude;
        pivot_row = r;
      }
    }
    if (pivot_row == rows_) continue;
    std::swap(m[rank], m[pivot_row]);

    const Rational pivot = m[rank][col];
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      if (m[r][col] == 0) continue;
      const Rational factor = m[r][col] / pivot;
      for (std::size_t c = 0; c < cols_; ++c) {
        m[r][c] -= factor * m[rank][c];
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace betticone
