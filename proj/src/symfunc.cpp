#include "sl2sym/symfunc.hpp"

#include <mutex>
#include <utility>

#include "sl2sym/errors.hpp"

namespace sl2sym {

SchurVector::SchurVector(int ambientN) : ambient_(ambientN) {
  if (ambientN < 1) throw InvalidInput("Schur vectors need n >= 1");
}

SchurVector SchurVector::basis(const Partition& lambda, int ambientN) {
  SchurVector v(ambientN);
  v.add_term(lambda, 1);
  return v;
}

Rational SchurVector::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SchurVector::add_term(const Partition& lambda, const Rational& c) {
  if (lambda.length() > ambient_) throw InvalidInput("partition " + lambda.to_string() + " has more than n rows");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void SchurVector::require_same_ambient(const SchurVector& other) const {
  if (ambient_ != other.ambient_) throw InvalidInput("Schur vectors live in different ambient n");
}

SchurVector& SchurVector::operator+=(const SchurVector& other) {
  require_same_ambient(other);
  for (const auto& [l, c] : other.terms_) add_term(l, c);
  return *this;
}

SchurVector& SchurVector::operator-=(const SchurVector& other) {
  require_same_ambient(other);
  for (const auto& [l, c] : other.terms_) add_term(l, -c);
  return *this;
}

SchurVector& SchurVector::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [l, coeff] : terms_) coeff *= c;
  return *this;
}

std::string SchurVector::to_string() const {
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
    s += "*s" + l.to_string();
  }
  return s;
}

std::vector<int> staircase(int n) {
  std::vector<int> delta(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) delta[static_cast<std::size_t>(k)] = n - 1 - k;
  return delta;
}

namespace {

// Fills the diagram row by row; tableau[r][c] holds entries 1..n.
void fill_tableaux(const Partition& shape, int n, int row, int col, std::vector<std::vector<int>>& tableau,
                   Exponent& weight, Poly& out) {
  if (row == shape.length()) {
    out.add_term(weight, 1);
    return;
  }
  if (col == shape[static_cast<std::size_t>(row)]) {
    fill_tableaux(shape, n, row + 1, 0, tableau, weight, out);
    return;
  }
  int low = 1;
  if (col > 0) low = std::max(low, tableau[row][col - 1]);
  if (row > 0) low = std::max(low, tableau[row - 1][col] + 1);
  // rows below this one still need strictly larger entries in this column
  int rowsBelow = 0;
  while (row + rowsBelow + 1 < shape.length() && shape[static_cast<std::size_t>(row + rowsBelow + 1)] > col) ++rowsBelow;
  for (int entry = low; entry <= n - rowsBelow; ++entry) {
    tableau[row][col] = entry;
    ++weight[static_cast<std::size_t>(entry - 1)];
    fill_tableaux(shape, n, row, col + 1, tableau, weight, out);
    --weight[static_cast<std::size_t>(entry - 1)];
  }
}

Poly compute_schur_poly(const Partition& lambda, int n) {
  Poly out(n);
  std::vector<std::vector<int>> tableau(static_cast<std::size_t>(lambda.length()));
  for (int r = 0; r < lambda.length(); ++r) tableau[r].assign(static_cast<std::size_t>(lambda[r]), 0);
  Exponent weight(static_cast<std::size_t>(n), 0);
  fill_tableaux(lambda, n, 0, 0, tableau, weight, out);
  return out;
}

}  // namespace

Poly schur_to_poly(const Partition& lambda, int n) {
  if (n < 1) throw InvalidInput("Schur polynomials need n >= 1");
  if (lambda.length() > n) throw InvalidInput("partition " + lambda.to_string() + " has more than n rows");

  static std::mutex mutex;
  static std::map<std::pair<Partition, int>, Poly> cache;
  const auto key = std::make_pair(lambda, n);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  Poly result = compute_schur_poly(lambda, n);
  std::lock_guard lock(mutex);
  return cache.try_emplace(key, std::move(result)).first->second;
}

Poly to_poly(const SchurVector& v) {
  Poly out(v.ambient());
  for (const auto& [l, c] : v.terms()) out += schur_to_poly(l, v.ambient()) * c;
  return out;
}

SchurVector poly_to_schur(const Poly& f) {
  if (!is_symmetric(f)) throw InvalidInput("poly_to_schur requires a symmetric polynomial");
  const int n = f.ambient();
  SchurVector out(n);
  Poly remainder = f;
  while (!remainder.is_zero()) {
    const auto& [lead, coeff] = *remainder.terms().rbegin();
    for (std::size_t k = 1; k < lead.size(); ++k) {
      if (lead[k] > lead[k - 1]) throw InternalError("leading exponent of a symmetric remainder is not a partition");
    }
    const Partition lambda(lead);
    const Rational c = coeff;
    out.add_term(lambda, c);
    remainder -= schur_to_poly(lambda, n) * c;
  }
  return out;
}

SchurVector multiply(const SchurVector& u, const SchurVector& v) {
  if (u.ambient() != v.ambient()) throw InvalidInput("Schur vectors live in different ambient n");
  if (u.is_zero() || v.is_zero()) return SchurVector(u.ambient());
  return poly_to_schur(to_poly(u) * to_poly(v));
}

SchurVector pow(const SchurVector& u, unsigned e) {
  SchurVector result = SchurVector::unit(u.ambient());
  for (unsigned k = 0; k < e; ++k) result = multiply(result, u);
  return result;
}

SchurVector pieri_e1(const SchurVector& u) {
  SchurVector out(u.ambient());
  for (const auto& [l, c] : u.terms()) {
    for (const Cell& cell : addable_corners(l, u.ambient())) out.add_term(l.with_cell(cell), c);
  }
  return out;
}

SchurVector power_sum_schur(int k, int n) {
  if (k < 1) throw InvalidInput("power sums start at p_1");
  SchurVector out(n);
  for (int i = 0; i < k && i + 1 <= n; ++i) {
    std::vector<int> hook(static_cast<std::size_t>(i + 1), 1);
    hook[0] = k - i;
    out.add_term(Partition(hook), i % 2 ? -1 : 1);
  }
  return out;
}

SchurVector elementary_schur(int i, int n) {
  if (i < 0 || i > n) throw InvalidInput("e_i requires 0 <= i <= n");
  return SchurVector::basis(Partition(std::vector<int>(static_cast<std::size_t>(i), 1)), n);
}

SchurVector homogeneous_schur(int i, int n) {
  if (i < 0) throw InvalidInput("h_i requires i >= 0");
  return SchurVector::basis(Partition({i}), n);
}

SchurVector z_generator_schur(int i, int n) {
  if (i < 2 || i > n) throw InvalidInput("z_i requires 2 <= i <= n");
  SchurVector result(n);
  SchurVector p1Power = SchurVector::unit(n);
  for (int k = 0; k <= i - 2; ++k) {
    BigInt coeff = binomial(static_cast<unsigned long>(i), static_cast<unsigned long>(k));
    BigInt npow;
    mpz_pow_ui(npow.get_mpz_t(), BigInt(n).get_mpz_t(), static_cast<unsigned long>(i - k - 1));
    coeff *= npow;
    if (k % 2) coeff = -coeff;
    result += multiply(power_sum_schur(i - k, n), p1Power) * Rational(coeff);
    p1Power = pieri_e1(p1Power);
  }
  const int sign = (i + 1) % 2 == 0 ? 1 : -1;
  result += pieri_e1(p1Power) * Rational((i - 1) * sign);
  return result;
}

SchurVector z_monomial_schur(const AlphaTuple& alpha, int n) {
  if (n < 2 || static_cast<int>(alpha.exponents.size()) != n - 1) {
    throw InvalidInput("alpha must have length n-1");
  }
  SchurVector result = SchurVector::unit(n);
  for (std::size_t k = 0; k < alpha.exponents.size(); ++k) {
    if (alpha.exponents[k] < 0) throw InvalidInput("alpha entries must be natural");
    if (alpha.exponents[k] == 0) continue;
    result = multiply(result, pow(z_generator_schur(static_cast<int>(k) + 2, n), static_cast<unsigned>(alpha.exponents[k])));
  }
  return result;
}

}  // namespace sl2sym
