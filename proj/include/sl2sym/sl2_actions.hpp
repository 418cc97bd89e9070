#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sl2sym/combinatorics.hpp"
#include "sl2sym/linalg.hpp"
#include "sl2sym/poly.hpp"
#include "sl2sym/symfunc.hpp"

namespace sl2sym {

/// Highest weight (finite case) or half lowest weight (graded case) mapped
/// to its multiplicity. Only positive multiplicities are stored.
struct WeightedDecomposition {
  std::map<int, BigInt> multiplicities;

  BigInt multiplicity(int weight) const;
  /// Σ multiplicity·(i+1): the dimension of ⊕ V_i.
  BigInt finite_dimension() const;

  friend bool operator==(const WeightedDecomposition&, const WeightedDecomposition&) = default;
};

/// Multiset of cartan eigenvalues, Σ_w mult(w)·q^w.
struct Character {
  std::map<int, BigInt> multiplicities;

  BigInt multiplicity(int weight) const;
  BigInt dimension() const;
  /// Adds the character of V_i (weights −i, −i+2, …, i) times c.
  void add_irreducible(int highestWeight, const BigInt& c);

  friend bool operator==(const Character&, const Character&) = default;
};

struct LowestWeightVector {
  SchurVector vector;
  int weight;
};

enum class NamedFamily { power_sum, elementary, homogeneous };

/// First representation in the Schur basis:
///   lower(s_λ)  = −Σ_{λ−□} (n + c(□)) s_{λ−□}
///   cartan(s_λ) = 2|λ| s_λ
///   raise(s_λ)  = Σ_{λ+□, ≤ n rows} c(□) s_{λ+□}
SchurVector act_rho1(SlOp op, const SchurVector& v);

/// Closed-form images of p_i, e_i, h_i under the first representation.
SchurVector act_rho1_named(SlOp op, NamedFamily family, int i, int n);

/// Second representation with column bound d:
///   lower(s_λ)  = Σ_{λ−□} (n + c(□)) s_{λ−□}
///   cartan(s_λ) = (2|λ| − n·d) s_λ
///   raise(s_λ)  = Σ_{λ+□, ≤ n rows} (d − c(□)) s_{λ+□}
/// Every partition of v must satisfy λ₁ ≤ d.
SchurVector act_rho2(SlOp op, const SchurVector& v, int d);

/// w(α) = 2(2α₁ + 3α₂ + ··· + nα_{n−1}).
int weight_of_alpha(const AlphaTuple& alpha);

/// z^α for every α of degree ≤ maxDegree, ordered by degree then α.
/// Each vector is checked against the lowering operator.
std::vector<LowestWeightVector> lowest_weight_basis_rho1(int n, int maxDegree);

/// Kernel of the first representation's lowering operator on the degree-m
/// component of Λₙ, by exact nullspace.
std::vector<LowestWeightVector> lowest_weight_space_rho1(int n, int degree);

/// i ↦ c_i (number of lowest weight vectors of weight 2i) for i ≤ maxHalfWeight.
WeightedDecomposition decompose_lambda_n(int n, int maxHalfWeight);

/// Cartan eigenvalues 2|λ| − nd over the Schur basis of Λₙ⁽ᵈ⁾.
Character character_finite(int n, int d);

/// Multiplicities of V_i in Λₙ⁽ᵈ⁾ by peeling the character from the top.
WeightedDecomposition decompose_finite(int n, int d);
/// Same peeling applied to an arbitrary finite character.
WeightedDecomposition peel_character(Character ch);

/// Basis of the kernel of the second representation's lowering operator on
/// Λₙ⁽ᵈ⁾, graded by weight (ascending).
std::vector<LowestWeightVector> lowest_weight_space_rho2(int n, int d);

/// w_i = i!/((d−i+1)···d)·e_i for i = 0..d, in d variables. Under the second
/// representation with column bound 1 these span a copy of V_d.
std::vector<SchurVector> vd_realization(int d);

/// Matrix of a linear map between two spans of Schur basis elements.
/// Columns follow `domain`, rows follow `codomain`; images must stay in the
/// codomain span.
RationalMatrix operator_matrix(const std::function<SchurVector(const SchurVector&)>& map,
                               const std::vector<Partition>& domain, const std::vector<Partition>& codomain,
                               int n);

}  // namespace sl2sym
