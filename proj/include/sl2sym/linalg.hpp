#pragma once

#include <cstddef>
#include <vector>

#include "sl2sym/rational.hpp"

namespace sl2sym {

/// Dense row-major matrix over ℚ, sized for the small graded components the
/// decomposition code works with.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

/// Reduced row echelon form plus the pivot column of each nonzero row.
/// Pivoting is deterministic: leftmost column first, smallest row index
/// with a nonzero entry.
struct EchelonForm {
  RationalMatrix reduced;
  std::vector<std::size_t> pivotColumns;
};

EchelonForm row_reduce(RationalMatrix m);

std::size_t rank(const RationalMatrix& m);

/// Basis of {x : m·x = 0}; one vector per free column, with a 1 in that
/// column and zeros in the other free columns.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);

}  // namespace sl2sym
