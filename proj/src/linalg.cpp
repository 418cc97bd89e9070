#include "sl2sym/linalg.hpp"

namespace sl2sym {

EchelonForm row_reduce(RationalMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    }
    const Rational inv = 1 / Rational(m(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const RationalMatrix& m) { return row_reduce(m).pivotColumns.size(); }

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
  const EchelonForm ef = row_reduce(m);
  std::vector<bool> isPivot(m.cols(), false);
  for (std::size_t c : ef.pivotColumns) isPivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (isPivot[free]) continue;
    std::vector<Rational> v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < ef.pivotColumns.size(); ++r) v[ef.pivotColumns[r]] = -ef.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace sl2sym
