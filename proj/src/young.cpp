#include "sl2sym/young.hpp"

#include <algorithm>

#include "sl2sym/errors.hpp"

namespace sl2sym {

DiagramVector::DiagramVector(std::optional<int> rowBound) : rowBound_(rowBound) {
  if (rowBound && *rowBound < 1) throw InvalidInput("row bound must be positive");
}

DiagramVector DiagramVector::diagram(const Partition& lambda, std::optional<int> rowBound) {
  DiagramVector v(rowBound);
  v.add_term(lambda, 1);
  return v;
}

Rational DiagramVector::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Rational(0) : it->second;
}

int DiagramVector::max_size() const {
  int m = -1;
  for (const auto& [l, c] : terms_) m = std::max(m, l.size());
  return m;
}

void DiagramVector::add_term(const Partition& lambda, const Rational& c) {
  if (rowBound_ && lambda.length() > *rowBound_) {
    throw InvalidInput("diagram " + lambda.to_string() + " exceeds the row bound");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void DiagramVector::require_same_bound(const DiagramVector& other) const {
  if (rowBound_ != other.rowBound_) throw InvalidInput("diagram vectors have different row bounds");
}

DiagramVector& DiagramVector::operator+=(const DiagramVector& other) {
  require_same_bound(other);
  for (const auto& [l, c] : other.terms_) add_term(l, c);
  return *this;
}

DiagramVector& DiagramVector::operator-=(const DiagramVector& other) {
  require_same_bound(other);
  for (const auto& [l, c] : other.terms_) add_term(l, -c);
  return *this;
}

DiagramVector& DiagramVector::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [l, coeff] : terms_) coeff *= c;
  return *this;
}

std::string DiagramVector::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [l, c] = *it;
    if (s.empty()) {
      s += to_short_string(c);
    } else {
      s += c < 0 ? " - " : " + ";
      s += to_short_string(abs(c));
    }
    s += "*y" + l.to_string();
  }
  return s;
}

namespace {

std::vector<Cell> bounded_addable(const Partition& lambda, std::optional<int> rowBound) {
  return rowBound ? addable_corners(lambda, *rowBound) : addable_corners(lambda);
}

}  // namespace

DiagramVector xi_minus(const Partition& lambda, std::optional<int> rowBound) {
  DiagramVector out(rowBound);
  for (const Cell& cell : removable_corners(lambda)) out.add_term(lambda.without_cell(cell), 1);
  return out;
}

DiagramVector nabla(NablaSign sign, const Partition& lambda, std::optional<int> rowBound) {
  DiagramVector out(rowBound);
  if (sign == NablaSign::plus) {
    for (const Cell& cell : bounded_addable(lambda, rowBound)) out.add_term(lambda.with_cell(cell), content(cell));
  } else {
    for (const Cell& cell : removable_corners(lambda)) out.add_term(lambda.without_cell(cell), content(cell));
  }
  return out;
}

namespace {

void require_row_bound(const DiagramVector& v, int n) {
  if (v.row_bound() != n) throw InvalidInput("diagram vector must be bounded by n rows");
}

}  // namespace

DiagramVector hat_apply(SlOp op, const DiagramVector& v, int n) {
  require_row_bound(v, n);
  DiagramVector out(n);
  for (const auto& [l, c] : v.terms()) {
    switch (op) {
      case SlOp::lower:
        out -= (xi_minus(l, n) * Rational(n) + nabla(NablaSign::minus, l, n)) * c;
        break;
      case SlOp::cartan:
        out.add_term(l, c * (2 * l.size()));
        break;
      case SlOp::raise:
        out += nabla(NablaSign::plus, l, n) * c;
        break;
    }
  }
  return out;
}

DiagramVector tilde_apply(SlOp op, const DiagramVector& v, int n, int d) {
  require_row_bound(v, n);
  DiagramVector out(n);
  for (const auto& [l, c] : v.terms()) {
    if (l.first_part() > d) throw InvalidInput("diagram " + l.to_string() + " exceeds the column bound d");
    switch (op) {
      case SlOp::lower:
        out += (xi_minus(l, n) * Rational(n) + nabla(NablaSign::minus, l, n)) * c;
        break;
      case SlOp::cartan:
        out.add_term(l, c * (2 * l.size() - n * d));
        break;
      case SlOp::raise:
        for (const Cell& cell : addable_corners(l, n)) out.add_term(l.with_cell(cell), c * (d - content(cell)));
        break;
    }
  }
  return out;
}

DiagramVector kerov_apply(KerovOp op, const DiagramVector& v, const KerovParams& params, int sizeCutoff) {
  if (v.row_bound()) throw InvalidInput("Kerov operators act on unbounded diagrams");
  const int limit = op == KerovOp::U ? sizeCutoff - 1 : sizeCutoff;
  if (v.max_size() > limit) throw InvalidInput("input exceeds the Kerov size cutoff");
  DiagramVector out;
  for (const auto& [l, c] : v.terms()) {
    switch (op) {
      case KerovOp::U:
        for (const Cell& cell : addable_corners(l)) out.add_term(l.with_cell(cell), c * (params.z + content(cell)));
        break;
      case KerovOp::L:
        out.add_term(l, c * (params.z * params.zprime + 2 * l.size()));
        break;
      case KerovOp::D:
        for (const Cell& cell : removable_corners(l)) {
          out.add_term(l.without_cell(cell), c * (params.zprime + content(cell)));
        }
        break;
    }
  }
  return out;
}

SchurVector phi(const DiagramVector& v) {
  if (!v.row_bound()) throw InvalidInput("phi needs a row-bounded diagram vector");
  SchurVector out(*v.row_bound());
  for (const auto& [l, c] : v.terms()) out.add_term(l, c);
  return out;
}

DiagramVector phi_inverse(const SchurVector& u) {
  DiagramVector out(u.ambient());
  for (const auto& [l, c] : u.terms()) out.add_term(l, c);
  return out;
}

DiagramVector diagram_multiply(const DiagramVector& a, const DiagramVector& b) {
  if (a.row_bound() != b.row_bound()) throw InvalidInput("diagram vectors have different row bounds");
  if (a.row_bound()) return phi_inverse(multiply(phi(a), phi(b)));
  // ℓ(ν) ≤ ℓ(λ) + ℓ(μ), so this many variables sees every term
  int longest = 0;
  for (const auto& [l, c] : a.terms()) longest = std::max(longest, l.length());
  int longestB = 0;
  for (const auto& [l, c] : b.terms()) longestB = std::max(longestB, l.length());
  const int n = std::max(1, longest + longestB);
  DiagramVector boundedA(n), boundedB(n);
  for (const auto& [l, c] : a.terms()) boundedA.add_term(l, c);
  for (const auto& [l, c] : b.terms()) boundedB.add_term(l, c);
  DiagramVector out;
  const DiagramVector product = diagram_multiply(boundedA, boundedB);
  for (const auto& [l, c] : product.terms()) out.add_term(l, c);
  return out;
}

DiagramVector pi_k(int k, int n) {
  if (k < 1) throw InvalidInput("pi_k requires k >= 1");
  DiagramVector out(n);
  for (int j = 0; j < std::min(k, n); ++j) {
    std::vector<int> hook(static_cast<std::size_t>(j + 1), 1);
    hook[0] = k - j;
    out.add_term(Partition(hook), j % 2 ? -1 : 1);
  }
  return out;
}

DiagramVector zeta(int i, int n) { return phi_inverse(z_generator_schur(i, n)); }

DiagramVector zeta_monomial(const AlphaTuple& alpha, int n) {
  if (n < 2 || static_cast<int>(alpha.exponents.size()) != n - 1) {
    throw InvalidInput("alpha must have length n-1");
  }
  DiagramVector result = DiagramVector::diagram(Partition{}, n);
  for (std::size_t k = 0; k < alpha.exponents.size(); ++k) {
    if (alpha.exponents[k] < 0) throw InvalidInput("alpha entries must be natural");
    const DiagramVector z = zeta(static_cast<int>(k) + 2, n);
    for (int e = 0; e < alpha.exponents[k]; ++e) result = diagram_multiply(result, z);
  }
  return result;
}

}  // namespace sl2sym
