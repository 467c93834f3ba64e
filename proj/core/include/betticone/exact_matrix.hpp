#pragma once

#include <cstddef>
#include <vector>

#include "betticone/rational.hpp"

namespace betticone {

// Dense matrix of exact rationals. Only the rank is needed by the library;
// two independent elimination strategies are provided so they can be
// cross-checked.
class ExactMatrix {
 public:
  ExactMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  // Bareiss fraction-free elimination on an integer-cleared copy,
  // left-to-right columns, first usable pivot.
  std::size_t rank() const;

  // Plain rational Gauss elimination, right-to-left columns, pivot of
  // largest magnitude.
  std::size_t rank_gauss() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

}  // namespace betticone
