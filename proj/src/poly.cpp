#include "sl2sym/poly.hpp"

#include <algorithm>
#include <numeric>

#include "sl2sym/errors.hpp"

namespace sl2sym {

Poly::Poly(int ambientN) : ambient_(ambientN) {
  if (ambientN < 1) throw InvalidInput("polynomials need at least one variable");
}

Poly Poly::constant(int ambientN, const Rational& c) {
  Poly p(ambientN);
  p.add_term(Exponent(static_cast<std::size_t>(ambientN), 0), c);
  return p;
}

Poly Poly::variable(int ambientN, int k) {
  if (k < 1 || k > ambientN) throw InvalidInput("variable index out of range");
  Exponent e(static_cast<std::size_t>(ambientN), 0);
  e[static_cast<std::size_t>(k - 1)] = 1;
  return monomial(std::move(e));
}

Poly Poly::monomial(Exponent exps, const Rational& c) {
  Poly p(static_cast<int>(exps.size()));
  for (int k : exps) {
    if (k < 0) throw InvalidInput("negative exponent");
  }
  p.add_term(exps, c);
  return p;
}

Rational Poly::coefficient(const Exponent& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::total_degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
  return deg;
}

void Poly::add_term(const Exponent& exps, const Rational& c) {
  if (static_cast<int>(exps.size()) != ambient_) throw InvalidInput("exponent length differs from ambient");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Poly::require_same_ambient(const Poly& other) const {
  if (ambient_ != other.ambient_) throw InvalidInput("polynomials live in different variable counts");
}

Poly& Poly::operator+=(const Poly& other) {
  require_same_ambient(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  require_same_ambient(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.require_same_ambient(b);
  Poly out(a.ambient_);
  Exponent e(static_cast<std::size_t>(a.ambient_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!s.empty()) s += " + ";
    s += to_short_string(c);
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      s += "*x" + std::to_string(k + 1);
      if (e[k] > 1) s += "^" + std::to_string(e[k]);
    }
  }
  return s;
}

Poly pow(const Poly& f, unsigned e) {
  Poly result = Poly::constant(f.ambient(), 1);
  for (unsigned k = 0; k < e; ++k) result = result * f;
  return result;
}

Poly partial(const Poly& f, int k) {
  if (k < 1 || k > f.ambient()) throw InvalidInput("variable index out of range");
  const auto idx = static_cast<std::size_t>(k - 1);
  Poly out(f.ambient());
  for (const auto& [e, c] : f.terms()) {
    if (e[idx] == 0) continue;
    Exponent de = e;
    --de[idx];
    out.add_term(de, c * e[idx]);
  }
  return out;
}

namespace {

// Σ_k x_k^{shift+1} ∂_k, scaled termwise; shift ∈ {−1, 0, 1}.
Poly shifted_euler(const Poly& f, int shift) {
  Poly out(f.ambient());
  for (const auto& [e, c] : f.terms()) {
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      Exponent de = e;
      de[k] += shift;
      out.add_term(de, c * e[k]);
    }
  }
  return out;
}

Poly multiply_by_p1(const Poly& f) {
  Poly out(f.ambient());
  for (const auto& [e, c] : f.terms()) {
    for (std::size_t k = 0; k < e.size(); ++k) {
      Exponent de = e;
      ++de[k];
      out.add_term(de, c);
    }
  }
  return out;
}

}  // namespace

Poly rho1_apply(SlOp op, const Poly& f) {
  switch (op) {
    case SlOp::lower: return -shifted_euler(f, -1);
    case SlOp::cartan: return shifted_euler(f, 0) * Rational(2);
    case SlOp::raise: return shifted_euler(f, 1);
  }
  throw InternalError("unknown operator");
}

Poly rho2_apply(SlOp op, const Poly& f, int d) {
  switch (op) {
    case SlOp::lower: return shifted_euler(f, -1);
    case SlOp::cartan: return shifted_euler(f, 0) * Rational(2) - f * Rational(f.ambient() * d);
    case SlOp::raise: return multiply_by_p1(f) * Rational(d) - shifted_euler(f, 1);
  }
  throw InternalError("unknown operator");
}

bool is_symmetric(const Poly& f) {
  for (std::size_t k = 0; k + 1 < static_cast<std::size_t>(f.ambient()); ++k) {
    for (const auto& [e, c] : f.terms()) {
      Exponent swapped = e;
      std::swap(swapped[k], swapped[k + 1]);
      if (f.coefficient(swapped) != c) return false;
    }
  }
  return true;
}

bool within_degree_bound(const Poly& f, int d) {
  for (const auto& [e, c] : f.terms()) {
    if (std::any_of(e.begin(), e.end(), [d](int k) { return k > d; })) return false;
  }
  return true;
}

Poly power_sum_poly(int k, int n) {
  if (k < 1) throw InvalidInput("power sums start at p_1");
  Poly p(n);
  for (int v = 0; v < n; ++v) {
    Exponent e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(v)] = k;
    p.add_term(e, 1);
  }
  return p;
}

Poly elementary_poly(int i, int n) {
  if (i < 0 || i > n) throw InvalidInput("e_i requires 0 <= i <= n");
  Poly p(n);
  // every 0/1 vector with i ones
  Exponent e(static_cast<std::size_t>(n), 0);
  std::fill(e.begin(), e.begin() + i, 1);
  do {
    p.add_term(e, 1);
  } while (std::prev_permutation(e.begin(), e.end()));
  return p;
}

namespace {

void fill_multisets(int remaining, std::size_t slot, Exponent& e, Poly& out) {
  if (slot + 1 == e.size()) {
    e[slot] = remaining;
    out.add_term(e, 1);
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    e[slot] = k;
    fill_multisets(remaining - k, slot + 1, e, out);
  }
}

}  // namespace

Poly homogeneous_poly(int i, int n) {
  if (i < 0) throw InvalidInput("h_i requires i >= 0");
  Poly p(n);
  Exponent e(static_cast<std::size_t>(n), 0);
  fill_multisets(i, 0, e, p);
  return p;
}

Poly alternant(const std::vector<int>& mu) {
  const int n = static_cast<int>(mu.size());
  Poly out(n);
  std::vector<int> perm(mu.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    // sign by counting inversions
    int inversions = 0;
    for (std::size_t a = 0; a < perm.size(); ++a) {
      for (std::size_t b = a + 1; b < perm.size(); ++b) inversions += perm[a] > perm[b];
    }
    // term ∏_j x_{perm[j]}^{μ_j}
    Exponent e(mu.size(), 0);
    for (std::size_t j = 0; j < mu.size(); ++j) e[static_cast<std::size_t>(perm[j])] = mu[j];
    out.add_term(e, inversions % 2 ? -1 : 1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Poly sigma_slice(const Poly& f) {
  if (!is_symmetric(f)) throw InvalidInput("sigma_slice requires a symmetric polynomial");
  const int n = f.ambient();
  const Poly slice = power_sum_poly(1, n) * Rational(1, n);
  Poly result(n);
  Poly lowered = f;
  Poly slicePower = Poly::constant(n, 1);
  BigInt fact = 1;
  for (int i = 0; !lowered.is_zero(); ++i) {
    if (i > 0) fact *= i;
    result += lowered * slicePower * Rational(1, fact);
    lowered = rho1_apply(SlOp::lower, lowered);
    slicePower = slicePower * slice;
  }
  return result;
}

Poly z_generator_poly(int i, int n) {
  if (i < 2 || i > n) throw InvalidInput("z_i requires 2 <= i <= n");
  const Poly p1 = power_sum_poly(1, n);
  Poly result(n);
  Poly p1Power = Poly::constant(n, 1);
  for (int k = 0; k <= i - 2; ++k) {
    BigInt coeff = binomial(static_cast<unsigned long>(i), static_cast<unsigned long>(k));
    BigInt npow;
    mpz_pow_ui(npow.get_mpz_t(), BigInt(n).get_mpz_t(), static_cast<unsigned long>(i - k - 1));
    coeff *= npow;
    if (k % 2) coeff = -coeff;
    result += power_sum_poly(i - k, n) * p1Power * Rational(coeff);
    p1Power = p1Power * p1;
  }
  // p1Power is now p₁^{i−1}
  const int sign = (i + 1) % 2 == 0 ? 1 : -1;
  result += p1Power * p1 * Rational((i - 1) * sign);
  return result;
}

}  // namespace sl2sym
