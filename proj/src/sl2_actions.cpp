#include "sl2sym/sl2_actions.hpp"

#include <algorithm>

#include "sl2sym/errors.hpp"

namespace sl2sym {

BigInt WeightedDecomposition::multiplicity(int weight) const {
  auto it = multiplicities.find(weight);
  return it == multiplicities.end() ? BigInt(0) : it->second;
}

BigInt WeightedDecomposition::finite_dimension() const {
  BigInt dim = 0;
  for (const auto& [w, m] : multiplicities) dim += m * (w + 1);
  return dim;
}

BigInt Character::multiplicity(int weight) const {
  auto it = multiplicities.find(weight);
  return it == multiplicities.end() ? BigInt(0) : it->second;
}

BigInt Character::dimension() const {
  BigInt dim = 0;
  for (const auto& [w, m] : multiplicities) dim += m;
  return dim;
}

void Character::add_irreducible(int highestWeight, const BigInt& c) {
  for (int w = -highestWeight; w <= highestWeight; w += 2) {
    BigInt& slot = multiplicities[w];
    slot += c;
    if (slot == 0) multiplicities.erase(w);
  }
}

SchurVector act_rho1(SlOp op, const SchurVector& v) {
  const int n = v.ambient();
  SchurVector out(n);
  for (const auto& [l, c] : v.terms()) {
    switch (op) {
      case SlOp::lower:
        for (const Cell& cell : removable_corners(l)) out.add_term(l.without_cell(cell), -c * (n + content(cell)));
        break;
      case SlOp::cartan:
        out.add_term(l, c * (2 * l.size()));
        break;
      case SlOp::raise:
        for (const Cell& cell : addable_corners(l, n)) out.add_term(l.with_cell(cell), c * content(cell));
        break;
    }
  }
  return out;
}

SchurVector act_rho1_named(SlOp op, NamedFamily family, int i, int n) {
  switch (family) {
    case NamedFamily::elementary: {
      if (i < 0 || i > n) throw InvalidInput("e_i requires 0 <= i <= n");
      switch (op) {
        case SlOp::lower:
          if (i == 0) return SchurVector(n);
          return elementary_schur(i - 1, n) * Rational(-(n - i + 1));
        case SlOp::cartan: return elementary_schur(i, n) * Rational(2 * i);
        case SlOp::raise: {
          SchurVector r = multiply(elementary_schur(1, n), elementary_schur(i, n));
          if (i < n) r -= elementary_schur(i + 1, n) * Rational(i + 1);
          return r;
        }
      }
      break;
    }
    case NamedFamily::homogeneous: {
      if (i < 0) throw InvalidInput("h_i requires i >= 0");
      switch (op) {
        case SlOp::lower:
          if (i == 0) return SchurVector(n);
          return homogeneous_schur(i - 1, n) * Rational(-(n + i - 1));
        case SlOp::cartan: return homogeneous_schur(i, n) * Rational(2 * i);
        case SlOp::raise:
          return homogeneous_schur(i + 1, n) * Rational(i + 1) -
                 multiply(homogeneous_schur(1, n), homogeneous_schur(i, n));
      }
      break;
    }
    case NamedFamily::power_sum: {
      if (i < 1) throw InvalidInput("p_i requires i >= 1");
      // p₀ = n, so lower(p₁) = −n
      switch (op) {
        case SlOp::lower:
          if (i == 1) return SchurVector::unit(n) * Rational(-n);
          return power_sum_schur(i - 1, n) * Rational(-i);
        case SlOp::cartan: return power_sum_schur(i, n) * Rational(2 * i);
        case SlOp::raise: return power_sum_schur(i + 1, n) * Rational(i);
      }
      break;
    }
  }
  throw InternalError("unknown operator or family");
}

SchurVector act_rho2(SlOp op, const SchurVector& v, int d) {
  const int n = v.ambient();
  SchurVector out(n);
  for (const auto& [l, c] : v.terms()) {
    if (l.first_part() > d) throw InvalidInput("partition " + l.to_string() + " exceeds the column bound d");
    switch (op) {
      case SlOp::lower:
        for (const Cell& cell : removable_corners(l)) out.add_term(l.without_cell(cell), c * (n + content(cell)));
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

int weight_of_alpha(const AlphaTuple& alpha) { return 2 * alpha.degree(); }

std::vector<LowestWeightVector> lowest_weight_basis_rho1(int n, int maxDegree) {
  if (n < 2) throw InvalidInput("lowest weight basis requires n >= 2");
  std::vector<LowestWeightVector> out;
  for (int m = 0; m <= maxDegree; ++m) {
    for (const AlphaTuple& alpha : alpha_tuples_of_degree(n, m)) {
      SchurVector z = z_monomial_schur(alpha, n);
      if (!act_rho1(SlOp::lower, z).is_zero()) throw InternalError("z^alpha is not annihilated by lowering");
      if (act_rho1(SlOp::cartan, z) != z * Rational(weight_of_alpha(alpha))) {
        throw InternalError("z^alpha has the wrong cartan eigenvalue");
      }
      out.push_back({std::move(z), weight_of_alpha(alpha)});
    }
  }
  return out;
}

RationalMatrix operator_matrix(const std::function<SchurVector(const SchurVector&)>& map,
                               const std::vector<Partition>& domain, const std::vector<Partition>& codomain,
                               int n) {
  std::map<Partition, std::size_t> rowOf;
  for (std::size_t r = 0; r < codomain.size(); ++r) rowOf.emplace(codomain[r], r);
  RationalMatrix m(codomain.size(), domain.size());
  for (std::size_t col = 0; col < domain.size(); ++col) {
    const SchurVector image = map(SchurVector::basis(domain[col], n));
    for (const auto& [l, c] : image.terms()) {
      auto it = rowOf.find(l);
      if (it == rowOf.end()) throw InternalError("operator image leaves the codomain span");
      m(it->second, col) = c;
    }
  }
  return m;
}

namespace {

std::vector<LowestWeightVector> kernel_of_lowering(const std::function<SchurVector(const SchurVector&)>& lower,
                                                   const std::vector<Partition>& domain,
                                                   const std::vector<Partition>& codomain, int n, int weight) {
  std::vector<LowestWeightVector> out;
  if (domain.empty()) return out;
  for (const auto& coords : nullspace(operator_matrix(lower, domain, codomain, n))) {
    SchurVector v(n);
    for (std::size_t k = 0; k < domain.size(); ++k) v.add_term(domain[k], coords[k]);
    out.push_back({std::move(v), weight});
  }
  return out;
}

}  // namespace

std::vector<LowestWeightVector> lowest_weight_space_rho1(int n, int degree) {
  if (degree < 0) return {};
  const auto lower = [](const SchurVector& v) { return act_rho1(SlOp::lower, v); };
  return kernel_of_lowering(lower, partitions_in_box(degree, n), partitions_in_box(degree - 1, n), n, 2 * degree);
}

WeightedDecomposition decompose_lambda_n(int n, int maxHalfWeight) {
  if (n < 2) throw InvalidInput("decomposition of Lambda_n requires n >= 2");
  WeightedDecomposition out;
  for (int i = 0; i <= maxHalfWeight; ++i) {
    BigInt c = count_lw_solutions(n, i);
    if (c != 0) out.multiplicities.emplace(i, std::move(c));
  }
  // grading check: dim of the degree-m component equals Σ_{j≤m} c_j
  BigInt cumulative = 0;
  for (int m = 0; m <= maxHalfWeight; ++m) {
    cumulative += out.multiplicity(m);
    if (cumulative != static_cast<unsigned long>(partitions_in_box(m, n).size())) {
      throw InternalError("lowest weight counts disagree with the graded dimension");
    }
  }
  return out;
}

Character character_finite(int n, int d) {
  if (n < 0 || d < 0) throw InvalidInput("character requires natural n and d");
  Character ch;
  for (const Partition& l : partitions_in_rectangle(n, d)) ch.multiplicities[2 * l.size() - n * d] += 1;
  return ch;
}

WeightedDecomposition peel_character(Character ch) {
  WeightedDecomposition out;
  while (!ch.multiplicities.empty()) {
    const auto& [top, mult] = *ch.multiplicities.rbegin();
    if (top < 0 || mult < 0) throw InternalError("character peeling produced a negative multiplicity");
    const int weight = top;
    const BigInt m = mult;
    out.multiplicities.emplace(weight, m);
    ch.add_irreducible(weight, -m);
    for (const auto& [w, c] : ch.multiplicities) {
      if (c < 0) throw InternalError("character peeling produced a negative multiplicity");
    }
  }
  return out;
}

WeightedDecomposition decompose_finite(int n, int d) { return peel_character(character_finite(n, d)); }

std::vector<LowestWeightVector> lowest_weight_space_rho2(int n, int d) {
  if (n < 1 || d < 0) throw InvalidInput("lowest weight space requires n >= 1 and d >= 0");
  const auto lower = [d](const SchurVector& v) { return act_rho2(SlOp::lower, v, d); };
  std::vector<LowestWeightVector> out;
  std::vector<Partition> below;
  for (int m = 0; m <= n * d; ++m) {
    std::vector<Partition> layer = partitions_in_box(m, n, d);
    auto vectors = kernel_of_lowering(lower, layer, below, n, 2 * m - n * d);
    for (auto& v : vectors) out.push_back(std::move(v));
    below = std::move(layer);
  }
  return out;
}

std::vector<SchurVector> vd_realization(int d) {
  if (d < 1) throw InvalidInput("V_d realization requires d >= 1");
  std::vector<SchurVector> w;
  BigInt fallingFactorial = 1;  // d(d−1)···(d−i+1)
  for (int i = 0; i <= d; ++i) {
    if (i > 0) fallingFactorial *= d - i + 1;
    w.push_back(elementary_schur(i, d) * make_rational(factorial(static_cast<unsigned long>(i)), fallingFactorial));
  }
  return w;
}

}  // namespace sl2sym
