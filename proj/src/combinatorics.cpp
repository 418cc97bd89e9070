#include "sl2sym/combinatorics.hpp"

#include <algorithm>
#include <numeric>

#include "sl2sym/errors.hpp"

namespace sl2sym {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] <= 0) throw InvalidInput("partition parts must be positive");
    if (k > 0 && parts_[k] > parts_[k - 1]) throw InvalidInput("partition must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::with_cell(const Cell& cell) const {
  std::vector<int> p = parts_;
  const auto row = static_cast<std::size_t>(cell.row - 1);
  if (row == p.size()) p.push_back(0);
  if (row > p.size() || p[row] + 1 != cell.col) throw InvalidInput("cell is not addable");
  ++p[row];
  return Partition(std::move(p));
}

Partition Partition::without_cell(const Cell& cell) const {
  std::vector<int> p = parts_;
  const auto row = static_cast<std::size_t>(cell.row - 1);
  if (row >= p.size() || p[row] != cell.col) throw InvalidInput("cell is not removable");
  --p[row];
  return Partition(std::move(p));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(parts_[k]);
  }
  return s + ")";
}

int AlphaTuple::degree() const {
  int deg = 0;
  for (std::size_t k = 0; k < exponents.size(); ++k) deg += static_cast<int>(k + 2) * exponents[k];
  return deg;
}

std::vector<Cell> addable_corners(const Partition& lambda, int rowBound) {
  if (lambda.length() > rowBound) throw InvalidInput("partition has more rows than the row bound");
  std::vector<Cell> cells;
  for (int i = 0; i < lambda.length(); ++i) {
    if (i == 0 || lambda[i] < lambda[i - 1]) cells.push_back({i + 1, lambda[i] + 1});
  }
  if (lambda.length() < rowBound) cells.push_back({lambda.length() + 1, 1});
  return cells;
}

std::vector<Cell> addable_corners(const Partition& lambda) {
  return addable_corners(lambda, lambda.length() + 1);
}

std::vector<Cell> removable_corners(const Partition& lambda) {
  std::vector<Cell> cells;
  for (int i = 0; i < lambda.length(); ++i) {
    if (i + 1 == lambda.length() || lambda[i] > lambda[i + 1]) cells.push_back({i + 1, lambda[i]});
  }
  return cells;
}

namespace {

void fill_partitions(int remaining, int maxParts, int maxPart, std::vector<int>& prefix,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (maxParts == 0) return;
  for (int part = std::min(remaining, maxPart); part >= 1; --part) {
    // remaining parts are at most `part` each
    if (static_cast<long>(part) * maxParts < remaining) break;
    prefix.push_back(part);
    fill_partitions(remaining - part, maxParts - 1, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_in_box(int size, int maxParts, std::optional<int> maxPart) {
  std::vector<Partition> out;
  if (size < 0 || maxParts < 0) return out;
  std::vector<int> prefix;
  fill_partitions(size, maxParts, maxPart.value_or(size), prefix, out);
  return out;
}

std::vector<Partition> partitions_in_rectangle(int maxParts, int maxPart) {
  std::vector<Partition> out;
  for (int m = 0; m <= maxParts * maxPart; ++m) {
    auto layer = partitions_in_box(m, maxParts, maxPart);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

BigInt count_partitions_in_rectangle(int maxParts, int maxPart, int size) {
  if (size < 0 || maxParts < 0 || maxPart < 0) return 0;
  if (size == 0) return 1;
  if (static_cast<long>(maxParts) * maxPart < size) return 0;
  // ways[c][s]: multisets of parts from {1..v} with c elements summing to s
  std::vector<std::vector<BigInt>> ways(maxParts + 1, std::vector<BigInt>(size + 1, 0));
  ways[0][0] = 1;
  for (int v = 1; v <= maxPart; ++v) {
    for (int c = 1; c <= maxParts; ++c) {
      for (int s = v; s <= size; ++s) ways[c][s] += ways[c - 1][s - v];
    }
  }
  BigInt total = 0;
  for (int c = 0; c <= maxParts; ++c) total += ways[c][size];
  return total;
}

BigInt gamma(int a, int n, int i) {
  if (n < 1) throw InvalidInput("gamma requires n >= 1");
  if (a < n) throw InvalidInput("gamma requires a >= n");
  const int top = n * (a - n);
  if (i < 0 || i > top) return 0;

  // numerator ∏ (1 − T^{a−n+j}), truncated at the final degree
  std::vector<BigInt> poly(top + 1, 0);
  poly[0] = 1;
  for (int j = 1; j <= n; ++j) {
    const int shift = a - n + j;
    for (int k = top; k >= shift; --k) poly[k] -= poly[k - shift];
  }
  // exact division by each (1 − T^j): q_k = p_k + q_{k−j}
  for (int j = 1; j <= n; ++j) {
    for (int k = j; k <= top; ++k) poly[k] += poly[k - j];
  }
  return poly[i];
}

BigInt sylvester_cayley(int n, int d, int i) {
  if (n < 0 || d < 0 || i < 0) return 0;
  if (n == 0) return i == 0 ? 1 : 0;
  const int excess = d * n - i;
  if (excess < 0 || excess % 2 != 0) return 0;
  const int half = excess / 2;
  return gamma(d + n, n, half) - gamma(d + n, n, half - 1);
}

BigInt count_lw_solutions(int n, int i) {
  if (n < 2) throw InvalidInput("count_lw_solutions requires n >= 2");
  if (i < 0) return 0;
  std::vector<BigInt> ways(i + 1, 0);
  ways[0] = 1;
  for (int coin = 2; coin <= n; ++coin) {
    for (int s = coin; s <= i; ++s) ways[s] += ways[s - coin];
  }
  return ways[i];
}

namespace {

void fill_alphas(int n, std::size_t slot, int remaining, std::vector<int>& exps, std::vector<AlphaTuple>& out) {
  if (slot + 1 == exps.size()) {
    const int weight = static_cast<int>(slot + 2);
    if (remaining % weight == 0) {
      exps[slot] = remaining / weight;
      out.push_back({exps});
    }
    return;
  }
  const int weight = static_cast<int>(slot + 2);
  for (int e = 0; e * weight <= remaining; ++e) {
    exps[slot] = e;
    fill_alphas(n, slot + 1, remaining - e * weight, exps, out);
  }
  exps[slot] = 0;
}

}  // namespace

std::vector<AlphaTuple> alpha_tuples_of_degree(int n, int degree) {
  if (n < 2) throw InvalidInput("alpha tuples require n >= 2");
  std::vector<AlphaTuple> out;
  if (degree < 0) return out;
  std::vector<int> exps(static_cast<std::size_t>(n - 1), 0);
  fill_alphas(n, 0, degree, exps, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sl2sym
