#pragma once

#include <map>
#include <string>
#include <vector>

#include "sl2sym/combinatorics.hpp"
#include "sl2sym/poly.hpp"
#include "sl2sym/rational.hpp"

namespace sl2sym {

/// Element of Λₙ written in the Schur basis: a finite ℚ-combination of
/// partitions with at most n rows. Zero coefficients are never stored.
class SchurVector {
 public:
  using Terms = std::map<Partition, Rational>;

  explicit SchurVector(int ambientN);
  /// The basis element s_λ.
  static SchurVector basis(const Partition& lambda, int ambientN);
  /// s_∅ = 1.
  static SchurVector unit(int ambientN) { return basis(Partition{}, ambientN); }

  int ambient() const { return ambient_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Partition& lambda) const;

  void add_term(const Partition& lambda, const Rational& c);

  SchurVector& operator+=(const SchurVector& other);
  SchurVector& operator-=(const SchurVector& other);
  SchurVector& operator*=(const Rational& c);

  friend SchurVector operator+(SchurVector a, const SchurVector& b) { return a += b; }
  friend SchurVector operator-(SchurVector a, const SchurVector& b) { return a -= b; }
  friend SchurVector operator-(SchurVector a) { return a *= Rational(-1); }
  friend SchurVector operator*(SchurVector a, const Rational& c) { return a *= c; }
  friend SchurVector operator*(const Rational& c, SchurVector a) { return a *= c; }
  friend bool operator==(const SchurVector& a, const SchurVector& b) = default;

  /// e.g. "-2*s(2) - 4*s(1,1)", "0" when empty.
  std::string to_string() const;

 private:
  void require_same_ambient(const SchurVector& other) const;

  int ambient_;
  Terms terms_;
};

/// δ = (n−1, …, 1, 0).
std::vector<int> staircase(int n);

/// s_λ(x₁,…,xₙ) as the generating function of semistandard tableaux.
/// Results are memoized; safe to call concurrently.
Poly schur_to_poly(const Partition& lambda, int n);
Poly to_poly(const SchurVector& v);

/// Schur expansion of a symmetric polynomial by leading-term elimination.
SchurVector poly_to_schur(const Poly& f);

/// Product in Λₙ, computed through the monomial expansion.
SchurVector multiply(const SchurVector& u, const SchurVector& v);
SchurVector pow(const SchurVector& u, unsigned e);

/// s_(1)·u by adding one box within n rows.
SchurVector pieri_e1(const SchurVector& u);

/// p_k = Σ_i (−1)^i s_{(k−i,1^i)}, hooks with more than n rows omitted.
SchurVector power_sum_schur(int k, int n);
SchurVector elementary_schur(int i, int n);
SchurVector homogeneous_schur(int i, int n);

/// z_i assembled from hook expansions of power sums.
SchurVector z_generator_schur(int i, int n);
/// z^α = z₂^{α₁}···zₙ^{α_{n−1}}.
SchurVector z_monomial_schur(const AlphaTuple& alpha, int n);

}  // namespace sl2sym
