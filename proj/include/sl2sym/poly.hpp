#pragma once

#include <map>
#include <string>
#include <vector>

#include "sl2sym/combinatorics.hpp"
#include "sl2sym/rational.hpp"

namespace sl2sym {

/// Exponent vector (k₁,…,kₙ) of the monomial x₁^{k₁}···xₙ^{kₙ}.
using Exponent = std::vector<int>;

/// Which sl₂ basis element an operator realizes.
enum class SlOp { lower, cartan, raise };

/// Sparse polynomial in a fixed number of variables with exact rational
/// coefficients. Zero coefficients are never stored.
class Poly {
 public:
  using Terms = std::map<Exponent, Rational>;

  explicit Poly(int ambientN);

  static Poly constant(int ambientN, const Rational& c);
  /// x_k, 1-based.
  static Poly variable(int ambientN, int k);
  static Poly monomial(Exponent exps, const Rational& c = 1);

  int ambient() const { return ambient_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Exponent& exps) const;
  /// −1 for the zero polynomial.
  int total_degree() const;

  /// Adds c·x^exps, dropping the term if it cancels.
  void add_term(const Exponent& exps, const Rational& c);

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= Rational(-1); }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) = default;

  std::string to_string() const;

 private:
  void require_same_ambient(const Poly& other) const;

  int ambient_;
  Terms terms_;
};

Poly pow(const Poly& f, unsigned e);

/// ∂f/∂x_k, 1-based k.
Poly partial(const Poly& f, int k);

/// First representation: lower = −Σ∂_k, cartan = 2Σx_k∂_k, raise = Σx_k²∂_k.
Poly rho1_apply(SlOp op, const Poly& f);
/// Second representation with parameter d: lower = Σ∂_k,
/// cartan = 2Σx_k∂_k − n·d, raise = Σ(−x_k²∂_k + d·x_k).
Poly rho2_apply(SlOp op, const Poly& f, int d);

/// Invariance under every adjacent transposition of variables.
bool is_symmetric(const Poly& f);
/// Every exponent of every variable is at most d.
bool within_degree_bound(const Poly& f, int d);

Poly power_sum_poly(int k, int n);
Poly elementary_poly(int i, int n);
Poly homogeneous_poly(int i, int n);

/// Alternant a_μ = det(x_i^{μ_j}) for an exponent sequence μ of length n.
Poly alternant(const std::vector<int>& mu);

/// σ(f) = Σ_i (1/i!)·lowerⁱ(f)·(p₁/n)ⁱ for the first representation's
/// lowering operator; lands in its kernel. Requires symmetric input.
Poly sigma_slice(const Poly& f);

/// z_i = Σ_{k=0}^{i−2} (−1)^k n^{i−k−1} C(i,k) p_{i−k} p₁^k + (i−1)(−1)^{i+1} p₁^i.
Poly z_generator_poly(int i, int n);

}  // namespace sl2sym
