#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sl2sym/rational.hpp"

namespace sl2sym {

/// A box of a Young diagram, 1-based (row, column).
struct Cell {
  int row = 1;
  int col = 1;

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Content c = col - row.
constexpr int content(const Cell& cell) { return cell.col - cell.row; }

/// Weakly decreasing sequence of positive integers. Trailing zeros passed to
/// the constructor are dropped; any other violation throws InvalidInput.
/// Ordering is lexicographic on the stored parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }

  /// Part k (0-based); 0 past the end.
  int operator[](std::size_t k) const { return k < parts_.size() ? parts_[k] : 0; }
  int first_part() const { return parts_.empty() ? 0 : parts_.front(); }

  /// λ + □ and λ − □. The cell must be addable / removable.
  Partition with_cell(const Cell& cell) const;
  Partition without_cell(const Cell& cell) const;

  /// "(2,1)"; the empty partition prints as "()".
  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Exponents of z₂^{α₁}···zₙ^{α_{n−1}}: entry k is the exponent of z_{k+2}.
struct AlphaTuple {
  std::vector<int> exponents;

  /// Σ (k+2)·α_k with 0-based k, i.e. 2α₁ + 3α₂ + ···.
  int degree() const;

  friend bool operator==(const AlphaTuple&, const AlphaTuple&) = default;
  friend auto operator<=>(const AlphaTuple&, const AlphaTuple&) = default;
};

/// Cells whose addition keeps a partition with at most rowBound rows,
/// top to bottom. Throws if λ already has more than rowBound rows.
std::vector<Cell> addable_corners(const Partition& lambda, int rowBound);
/// Same without a row bound.
std::vector<Cell> addable_corners(const Partition& lambda);
/// Removable cells, top to bottom.
std::vector<Cell> removable_corners(const Partition& lambda);

/// All partitions of `size` with at most maxParts parts, each ≤ maxPart
/// (nullopt: unbounded), in lexicographically decreasing order.
std::vector<Partition> partitions_in_box(int size, int maxParts, std::optional<int> maxPart = std::nullopt);

/// All partitions with at most maxParts parts, each ≤ maxPart (any size).
std::vector<Partition> partitions_in_rectangle(int maxParts, int maxPart);

/// Number of partitions of `size` fitting in a maxParts × maxPart box (DP).
BigInt count_partitions_in_rectangle(int maxParts, int maxPart, int size);

/// Coefficient of T^i in ∏_{j=1..n} (1 − T^{a−n+j}) / (1 − T^j).
BigInt gamma(int a, int n, int i);

/// Multiplicity of V_i in Symⁿ(V_d); zero when dn − i is odd or negative.
BigInt sylvester_cayley(int n, int d, int i);

/// Number of α ∈ ℕ^{n−1} with 2α₁ + 3α₂ + ··· + nα_{n−1} = i.
BigInt count_lw_solutions(int n, int i);

/// All α ∈ ℕ^{n−1} of the given degree, lexicographically increasing.
std::vector<AlphaTuple> alpha_tuples_of_degree(int n, int degree);

}  // namespace sl2sym
