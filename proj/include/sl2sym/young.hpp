#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "sl2sym/combinatorics.hpp"
#include "sl2sym/poly.hpp"
#include "sl2sym/rational.hpp"
#include "sl2sym/symfunc.hpp"

namespace sl2sym {

/// Finite ℚ-combination of Young diagrams, optionally restricted to at most
/// rowBound rows (unbounded for the Kerov operators).
class DiagramVector {
 public:
  using Terms = std::map<Partition, Rational>;

  explicit DiagramVector(std::optional<int> rowBound = std::nullopt);
  static DiagramVector diagram(const Partition& lambda, std::optional<int> rowBound = std::nullopt);

  std::optional<int> row_bound() const { return rowBound_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Partition& lambda) const;
  /// Largest |λ| in the support, −1 when zero.
  int max_size() const;

  void add_term(const Partition& lambda, const Rational& c);

  DiagramVector& operator+=(const DiagramVector& other);
  DiagramVector& operator-=(const DiagramVector& other);
  DiagramVector& operator*=(const Rational& c);

  friend DiagramVector operator+(DiagramVector a, const DiagramVector& b) { return a += b; }
  friend DiagramVector operator-(DiagramVector a, const DiagramVector& b) { return a -= b; }
  friend DiagramVector operator-(DiagramVector a) { return a *= Rational(-1); }
  friend DiagramVector operator*(DiagramVector a, const Rational& c) { return a *= c; }
  friend DiagramVector operator*(const Rational& c, DiagramVector a) { return a *= c; }
  friend bool operator==(const DiagramVector& a, const DiagramVector& b) = default;

  std::string to_string() const;

 private:
  void require_same_bound(const DiagramVector& other) const;

  std::optional<int> rowBound_;
  Terms terms_;
};

enum class NablaSign { plus, minus };

/// Σ over removable boxes of λ − □.
DiagramVector xi_minus(const Partition& lambda, std::optional<int> rowBound = std::nullopt);
/// Σ c(□)·(λ ± □); added boxes respect rowBound.
DiagramVector nabla(NablaSign sign, const Partition& lambda, std::optional<int> rowBound = std::nullopt);

/// Operators on ℚ𝒴ₙ matching the first representation under λ ↦ s_λ:
/// lower = −(n·ξ₋ + ∇₋), cartan = 2|λ|, raise = ∇₊.
DiagramVector hat_apply(SlOp op, const DiagramVector& v, int n);

/// Operators on ℚ𝒴ₙ⁽ᵈ⁾ matching the second representation under λ ↦ s_λ:
/// lower = n·ξ₋ + ∇₋, cartan = 2|λ| − nd, raise = Σ (d − c(□))·(λ + □).
DiagramVector tilde_apply(SlOp op, const DiagramVector& v, int n, int d);

enum class KerovOp { U, L, D };

struct KerovParams {
  Rational z;
  Rational zprime;
};

/// Kerov operators on unbounded diagrams:
///   U λ = Σ (z + c(□))(λ + □),  L λ = (zz′ + 2|λ|) λ,  D λ = Σ (z′ + c(□))(λ − □).
/// Computations are truncated at diagrams of size sizeCutoff: U rejects input
/// terms of size ≥ sizeCutoff, D and L reject sizes > sizeCutoff.
DiagramVector kerov_apply(KerovOp op, const DiagramVector& v, const KerovParams& params, int sizeCutoff);

/// λ ↦ s_λ. Requires a row bound; it becomes the ambient n.
SchurVector phi(const DiagramVector& v);
/// s_λ ↦ λ with rowBound = ambient n.
DiagramVector phi_inverse(const SchurVector& u);

/// Product transported from Λₙ (Littlewood–Richardson coefficients). For
/// unbounded vectors the product is computed with enough variables to be stable.
DiagramVector diagram_multiply(const DiagramVector& a, const DiagramVector& b);

/// π_k = Σ_j (−1)^j (k−j, 1^j), hooks with more than n rows omitted.
DiagramVector pi_k(int k, int n);
/// ζ_i = φ⁻¹(z_i).
DiagramVector zeta(int i, int n);
/// ζ^α = ζ₂^{α₁}···ζₙ^{α_{n−1}} with the transported product.
DiagramVector zeta_monomial(const AlphaTuple& alpha, int n);

}  // namespace sl2sym
