#include "sl2sym/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "sl2sym/combinatorics.hpp"
#include "sl2sym/errors.hpp"
#include "sl2sym/poly.hpp"
#include "sl2sym/sl2_actions.hpp"
#include "sl2sym/symfunc.hpp"
#include "sl2sym/young.hpp"

namespace sl2sym {

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{"commutators", "schur-action", "kernel", "identities",
                                              "tables",      "kerov",        "all"};
  return names;
}

namespace {

constexpr SlOp kOps[] = {SlOp::lower, SlOp::cartan, SlOp::raise};

// Returns an empty string on success, otherwise the first counterexample.
using Check = std::function<std::string()>;

void run_check(VerifyReport& report, const std::string& suite, const std::string& name, const Check& check) {
  CheckResult result{suite, name, false, {}};
  try {
    result.detail = check();
    result.passed = result.detail.empty();
  } catch (const std::exception& e) {
    result.detail = std::string("exception: ") + e.what();
  }
  report.checks.push_back(std::move(result));
}

std::vector<Exponent> monomials_up_to(int n, int maxDegree) {
  std::vector<Exponent> out;
  Exponent e(static_cast<std::size_t>(n), 0);
  std::function<void(std::size_t, int)> fill = [&](std::size_t slot, int remaining) {
    if (slot == e.size()) {
      out.push_back(e);
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      e[slot] = k;
      fill(slot + 1, remaining - k);
    }
    e[slot] = 0;
  };
  fill(0, maxDegree);
  return out;
}

std::vector<Partition> partitions_up_to(int maxSize, int maxParts) {
  std::vector<Partition> out;
  for (int m = 0; m <= maxSize; ++m) {
    auto layer = partitions_in_box(m, maxParts);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

// [raise,lower] = cartan, [cartan,raise] = 2 raise, [cartan,lower] = −2 lower on x.
template <typename V, typename Apply>
bool brackets_hold(const V& x, Apply apply) {
  const V lower = apply(SlOp::lower, x);
  const V cartan = apply(SlOp::cartan, x);
  const V raise = apply(SlOp::raise, x);
  if (apply(SlOp::raise, lower) - apply(SlOp::lower, raise) != cartan) return false;
  if (apply(SlOp::cartan, raise) - apply(SlOp::raise, cartan) != raise * Rational(2)) return false;
  if (apply(SlOp::cartan, lower) - apply(SlOp::lower, cartan) != lower * Rational(-2)) return false;
  return true;
}

std::string exp_string(const Exponent& e) {
  std::string s = "x^(";
  for (std::size_t k = 0; k < e.size(); ++k) s += (k ? "," : "") + std::to_string(e[k]);
  return s + ")";
}

const char* op_name(SlOp op) {
  switch (op) {
    case SlOp::lower: return "lower";
    case SlOp::cartan: return "cartan";
    case SlOp::raise: return "raise";
  }
  return "?";
}

std::string join_weights(const std::vector<int>& ws) {
  std::string s = "{";
  for (std::size_t k = 0; k < ws.size(); ++k) s += (k ? "," : "") + std::to_string(ws[k]);
  return s + "}";
}

std::string decomposition_string(const WeightedDecomposition& dec) {
  std::string s;
  for (const auto& [w, m] : dec.multiplicities) {
    if (!s.empty()) s += " + ";
    if (m != 1) s += m.get_str() + "*";
    s += "V" + std::to_string(w);
  }
  return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------- commutators

void suite_commutators(VerifyReport& r) {
  const std::string suite = "commutators";
  run_check(r, suite, "rho1 brackets on monomials of degree <= 8, n <= 4", []() -> std::string {
    for (int n = 1; n <= 4; ++n) {
      for (const Exponent& e : monomials_up_to(n, 8)) {
        if (!brackets_hold(Poly::monomial(e), [](SlOp op, const Poly& f) { return rho1_apply(op, f); })) {
          return "fails on " + exp_string(e);
        }
      }
    }
    return std::string();
  });
  run_check(r, suite, "rho2 brackets on monomials of degree <= 8, n <= 4, d <= 6", []() -> std::string {
    for (int n = 1; n <= 4; ++n) {
      for (int d = 0; d <= 6; ++d) {
        for (const Exponent& e : monomials_up_to(n, 8)) {
          if (!brackets_hold(Poly::monomial(e), [d](SlOp op, const Poly& f) { return rho2_apply(op, f, d); })) {
            return "fails on " + exp_string(e) + " d=" + std::to_string(d);
          }
        }
      }
    }
    return std::string();
  });
  run_check(r, suite, "Schur-basis rho1 brackets, |lambda| <= 6, n <= 4", []() -> std::string {
    for (int n = 1; n <= 4; ++n) {
      for (const Partition& l : partitions_up_to(6, n)) {
        if (!brackets_hold(SchurVector::basis(l, n), [](SlOp op, const SchurVector& v) { return act_rho1(op, v); })) {
          return "fails on s" + l.to_string() + " n=" + std::to_string(n);
        }
      }
    }
    return std::string();
  });
  run_check(r, suite, "Schur-basis rho2 brackets, |lambda| <= 6, n <= 4, d <= 6", []() -> std::string {
    for (int n = 1; n <= 4; ++n) {
      for (int d = 0; d <= 6; ++d) {
        for (const Partition& l : partitions_up_to(6, n)) {
          if (l.first_part() > d) continue;
          if (!brackets_hold(SchurVector::basis(l, n),
                             [d](SlOp op, const SchurVector& v) { return act_rho2(op, v, d); })) {
            return "fails on s" + l.to_string() + " n=" + std::to_string(n) + " d=" + std::to_string(d);
          }
        }
      }
    }
    return std::string();
  });
  run_check(r, suite, "diagram hat/tilde brackets, |lambda| <= 6, n <= 4, d <= 6", []() -> std::string {
    for (int n = 1; n <= 4; ++n) {
      for (const Partition& l : partitions_up_to(6, n)) {
        const auto y = DiagramVector::diagram(l, n);
        if (!brackets_hold(y, [n](SlOp op, const DiagramVector& v) { return hat_apply(op, v, n); })) {
          return "hat fails on " + l.to_string();
        }
        for (int d = l.first_part(); d <= 6; ++d) {
          if (!brackets_hold(y, [n, d](SlOp op, const DiagramVector& v) { return tilde_apply(op, v, n, d); })) {
            return "tilde fails on " + l.to_string() + " d=" + std::to_string(d);
          }
        }
      }
    }
    return std::string();
  });
}

// --------------------------------------------------------------- schur-action

void suite_schur_action(VerifyReport& r) {
  const std::string suite = "schur-action";
  run_check(r, suite, "bialternant identity s_lambda * a_delta = a_(lambda+delta), |lambda| <= 6, n <= 4", []() -> std::string {
    for (int n = 1; n <= 4; ++n) {
      const Poly vandermonde = alternant(staircase(n));
      for (const Partition& l : partitions_up_to(6, n)) {
        std::vector<int> shifted = staircase(n);
        for (int k = 0; k < n; ++k) shifted[static_cast<std::size_t>(k)] += l[static_cast<std::size_t>(k)];
        if (schur_to_poly(l, n) * vandermonde != alternant(shifted)) return "fails on " + l.to_string();
      }
    }
    return std::string();
  });
  run_check(r, suite, "rho1 Schur action equals differential operators, |lambda| <= 6, n <= 4", []() -> std::string {
    for (int n = 1; n <= 4; ++n) {
      for (const Partition& l : partitions_up_to(6, n)) {
        for (SlOp op : kOps) {
          if (act_rho1(op, SchurVector::basis(l, n)) != poly_to_schur(rho1_apply(op, schur_to_poly(l, n)))) {
            return std::string(op_name(op)) + " fails on s" + l.to_string() + " n=" + std::to_string(n);
          }
        }
      }
    }
    return std::string();
  });
  run_check(r, suite, "rho2 Schur action equals differential operators, |lambda| <= 6, n <= 4, d <= 6", []() -> std::string {
    for (int n = 1; n <= 4; ++n) {
      for (const Partition& l : partitions_up_to(6, n)) {
        for (int d = l.first_part(); d <= 6; ++d) {
          for (SlOp op : kOps) {
            if (act_rho2(op, SchurVector::basis(l, n), d) != poly_to_schur(rho2_apply(op, schur_to_poly(l, n), d))) {
              return std::string(op_name(op)) + " fails on s" + l.to_string() + " d=" + std::to_string(d);
            }
          }
        }
      }
    }
    return std::string();
  });
  run_check(r, suite, "closed forms on p_i, e_i, h_i match the Schur action, n <= 4", []() -> std::string {
    for (int n = 1; n <= 4; ++n) {
      for (SlOp op : kOps) {
        for (int i = 0; i <= n; ++i) {
          if (act_rho1_named(op, NamedFamily::elementary, i, n) != act_rho1(op, elementary_schur(i, n))) {
            return "e_" + std::to_string(i) + " " + op_name(op);
          }
        }
        for (int i = 0; i <= 5; ++i) {
          if (act_rho1_named(op, NamedFamily::homogeneous, i, n) != act_rho1(op, homogeneous_schur(i, n))) {
            return "h_" + std::to_string(i) + " " + op_name(op);
          }
        }
        for (int i = 1; i <= 5; ++i) {
          if (act_rho1_named(op, NamedFamily::power_sum, i, n) != act_rho1(op, power_sum_schur(i, n))) {
            return "p_" + std::to_string(i) + " " + op_name(op);
          }
        }
      }
    }
    return std::string();
  });
  run_check(r, suite, "hat and tilde operators are transported by phi, |lambda| <= 6, n <= 4, d <= 6", []() -> std::string {
    for (int n = 1; n <= 4; ++n) {
      for (const Partition& l : partitions_up_to(6, n)) {
        const auto y = DiagramVector::diagram(l, n);
        for (SlOp op : kOps) {
          if (phi(hat_apply(op, y, n)) != act_rho1(op, phi(y))) return "hat " + std::string(op_name(op)) + l.to_string();
          for (int d = l.first_part(); d <= 6; ++d) {
            if (phi(tilde_apply(op, y, n, d)) != act_rho2(op, phi(y), d)) {
              return "tilde " + std::string(op_name(op)) + l.to_string() + " d=" + std::to_string(d);
            }
          }
        }
      }
    }
    return std::string();
  });
  run_check(r, suite, "phi(pi_k) = p_k for k <= 6 and phi(zeta_i) = z_i for i <= n <= 4", []() -> std::string {
    for (int n = 1; n <= 4; ++n) {
      for (int k = 1; k <= 6; ++k) {
        if (phi(pi_k(k, n)) != poly_to_schur(power_sum_poly(k, n))) return "pi_" + std::to_string(k);
      }
      for (int i = 2; i <= n; ++i) {
        if (phi(zeta(i, n)) != poly_to_schur(z_generator_poly(i, n))) return "zeta_" + std::to_string(i);
      }
    }
    return std::string();
  });
  // operator definition gives lower(p_i) = −i p_{i−1}
  const SchurVector computed = act_rho1(SlOp::lower, power_sum_schur(3, 3));
  r.discrepancies.push_back({"lowering on power sums (n=3, i=3)", "lower(p_3) = -3*p_2 = " + computed.to_string(),
                             "D-(p_i) = i p_(i-1), i.e. +3*p_2"});
}

// --------------------------------------------------------------------- kernel

void suite_kernel(VerifyReport& r) {
  const std::string suite = "kernel";
  run_check(r, suite, "z_i is annihilated by lowering with cartan eigenvalue 2i, 2 <= i <= n <= 6", []() -> std::string {
    for (int n = 2; n <= 6; ++n) {
      for (int i = 2; i <= n; ++i) {
        const Poly z = z_generator_poly(i, n);
        if (!rho1_apply(SlOp::lower, z).is_zero()) return "lower z_" + std::to_string(i) + " n=" + std::to_string(n);
        if (rho1_apply(SlOp::cartan, z) != z * Rational(2 * i)) return "cartan z_" + std::to_string(i);
      }
    }
    return std::string();
  });
  run_check(r, suite, "sigma(p_i) = z_i / n^(i-1), i <= n <= 5", []() -> std::string {
    for (int n = 2; n <= 5; ++n) {
      for (int i = 2; i <= n; ++i) {
        BigInt npow;
        mpz_pow_ui(npow.get_mpz_t(), BigInt(n).get_mpz_t(), static_cast<unsigned long>(i - 1));
        if (sigma_slice(power_sum_poly(i, n)) != z_generator_poly(i, n) * make_rational(1, npow)) {
          return "fails for i=" + std::to_string(i) + " n=" + std::to_string(n);
        }
      }
    }
    return std::string();
  });
  run_check(r, suite, "sigma is multiplicative and lands in the kernel on sampled pairs, n <= 4", []() -> std::string {
    for (int n = 2; n <= 4; ++n) {
      std::vector<Poly> samples{power_sum_poly(1, n), power_sum_poly(2, n), elementary_poly(2, n),
                                homogeneous_poly(3, n), power_sum_poly(2, n) * power_sum_poly(1, n)};
      for (const Poly& f : samples) {
        if (!rho1_apply(SlOp::lower, sigma_slice(f)).is_zero()) return "sigma(f) not in kernel";
        for (const Poly& g : samples) {
          if (sigma_slice(f * g) != sigma_slice(f) * sigma_slice(g)) return "sigma(fg) != sigma(f)sigma(g)";
        }
      }
    }
    return std::string();
  });
  run_check(r, suite, "z^alpha basis matches the kernel dimension per degree, 3 <= n <= 4, degree <= 6", []() -> std::string {
    for (int n = 3; n <= 4; ++n) {
      const auto basis = lowest_weight_basis_rho1(n, 6);
      for (int m = 0; m <= 6; ++m) {
        const auto count = std::count_if(basis.begin(), basis.end(), [m](const auto& v) { return v.weight == 2 * m; });
        const auto kernel = lowest_weight_space_rho1(n, m);
        if (BigInt(count) != count_lw_solutions(n, m) || kernel.size() != static_cast<std::size_t>(count)) {
          return "degree " + std::to_string(m) + " n=" + std::to_string(n);
        }
      }
      // z^α of equal degree are linearly independent: rank of their coordinates
      for (int m = 0; m <= 6; ++m) {
        std::vector<SchurVector> layer;
        for (const auto& v : basis) {
          if (v.weight == 2 * m) layer.push_back(v.vector);
        }
        const auto parts = partitions_in_box(m, n);
        RationalMatrix coords(parts.size(), layer.size());
        for (std::size_t c = 0; c < layer.size(); ++c) {
          for (std::size_t row = 0; row < parts.size(); ++row) coords(row, c) = layer[c].coefficient(parts[row]);
        }
        if (rank(coords) != layer.size()) return "z^alpha dependent in degree " + std::to_string(m);
      }
    }
    return std::string();
  });
  run_check(r, suite, "lowest weight modules W(z^alpha): k <= 4, degree(alpha) <= 5, n <= 4", []() -> std::string {
    for (int n = 2; n <= 4; ++n) {
      for (const auto& lw : lowest_weight_basis_rho1(n, 5)) {
        SchurVector prev = lw.vector;
        SchurVector v = lw.vector;
        for (int k = 0; k <= 4; ++k) {
          if (act_rho1(SlOp::cartan, v) != v * Rational(lw.weight + 2 * k)) return "cartan relation";
          const SchurVector expected = k == 0 ? SchurVector(n) : prev * Rational(-k * (lw.weight + k - 1));
          if (act_rho1(SlOp::lower, v) != expected) return "lower relation k=" + std::to_string(k);
          prev = v;
          v = act_rho1(SlOp::raise, v);
        }
      }
    }
    return std::string();
  });
  run_check(r, suite, "raising is injective off constants: full column rank for 1 <= m <= 6, n <= 4", []() -> std::string {
    for (int n = 1; n <= 4; ++n) {
      for (int m = 1; m <= 6; ++m) {
        const auto raise = [](const SchurVector& v) { return act_rho1(SlOp::raise, v); };
        const auto domain = partitions_in_box(m, n);
        const auto m1 = operator_matrix(raise, domain, partitions_in_box(m + 1, n), n);
        if (rank(m1) != domain.size()) return "degree " + std::to_string(m) + " n=" + std::to_string(n);
      }
    }
    return std::string();
  });
  run_check(r, suite, "Lambda_3^(6) lowest weight space has weights {-18,-14,-12,-10,-8,-6,-6,-2}", []() -> std::string {
    std::vector<int> weights;
    for (const auto& v : lowest_weight_space_rho2(3, 6)) weights.push_back(v.weight);
    std::sort(weights.begin(), weights.end());
    const std::vector<int> expected{-18, -14, -12, -10, -8, -6, -6, -2};
    return weights == expected ? std::string() : "computed " + join_weights(weights);
  });
  run_check(r, suite, "listed Lambda_3^(6) generators lie in the box and the kernel with their weights", []() -> std::string {
    const int n = 3, d = 6;
    const SchurVector z2 = z_generator_schur(2, n);
    const SchurVector z3 = z_generator_schur(3, n);
    const std::vector<std::pair<SchurVector, int>> listed{
        {SchurVector::unit(n), -18},          {z2, -14},
        {z3, -12},                            {multiply(z3, z2), -8},
        {pow(z2, 2), -10},                    {pow(z2, 3), -6},
        {pow(z3, 2), -6},                     {pow(z2, 4) - multiply(pow(z3, 2), z2) * Rational(2), -2}};
    for (const auto& [v, w] : listed) {
      for (const auto& [l, c] : v.terms()) {
        if (l.first_part() > d) return "term s" + l.to_string() + " leaves the box";
      }
      if (!act_rho2(SlOp::lower, v, d).is_zero()) return "not in the kernel: " + v.to_string();
      if (act_rho2(SlOp::cartan, v, d) != v * Rational(w)) return "weight differs from " + std::to_string(w);
    }
    return std::string();
  });

  std::vector<int> degrees;
  for (int m = 0; m <= 8; ++m) {
    const auto kernel = lowest_weight_space_rho1(2, m);
    for (std::size_t k = 0; k < kernel.size(); ++k) degrees.push_back(m);
  }
  std::string computed = "kernel degrees " + join_weights(degrees) + " (z_2^i, weights 4i), Lambda_2 = W_0 + W_4 + W_8 + ...";
  r.discrepancies.push_back({"Lambda_2 lowest weight vectors", computed, "Lambda_2 = sum W(z_2^(2i)) = sum W_(8i)"});
}

// ----------------------------------------------------------------- identities

void suite_identities(VerifyReport& r) {
  const std::string suite = "identities";
  run_check(r, suite, "both two-variable power-sum identities hold for m = 1..8", []() -> std::string {
    const Poly p1 = power_sum_poly(1, 2);
    const Poly x = Poly::variable(2, 1);
    const Poly y = Poly::variable(2, 2);
    for (int m = 1; m <= 8; ++m) {
      Poly lhs(2);
      for (int k = 0; k <= 2 * m - 1; ++k) {
        Rational c = make_rational(binomial(2 * m + 1, k), 1);
        BigInt twoPow;
        mpz_ui_pow_ui(twoPow.get_mpz_t(), 2, static_cast<unsigned long>(k + 1));
        c *= make_rational((k + 1) % 2 ? -1 : 1, twoPow);
        lhs += power_sum_poly(2 * m + 1 - k, 2) * pow(p1, k) * c;
      }
      BigInt fourPow;
      mpz_ui_pow_ui(fourPow.get_mpz_t(), 2, static_cast<unsigned long>(2 * m));
      if (lhs != pow(p1, 2 * m + 1) * make_rational(m, fourPow)) return "first identity, m=" + std::to_string(m);

      Poly lhs2(2);
      for (int k = 0; k <= 2 * m - 2; ++k) {
        BigInt c = binomial(2 * m, k);
        BigInt twoPow;
        mpz_ui_pow_ui(twoPow.get_mpz_t(), 2, static_cast<unsigned long>(2 * m - k - 1));
        c *= twoPow;
        if (k % 2) c = -c;
        lhs2 += power_sum_poly(2 * m - k, 2) * pow(p1, k) * Rational(c);
      }
      const Poly rhs2 = pow(p1, 2 * m) * Rational(2 * m - 1) + pow(x - y, 2 * m);
      if (lhs2 != rhs2) return "second identity, m=" + std::to_string(m);
    }
    return std::string();
  });
  run_check(r, suite, "leading coefficient n*C_i = (n-1)^i + (-1)^i (n-1), 2 <= i <= n <= 8", []() -> std::string {
    for (int n = 2; n <= 8; ++n) {
      for (int i = 2; i <= n; ++i) {
        Exponent e(static_cast<std::size_t>(n), 0);
        e[0] = i;
        BigInt rhs;
        mpz_pow_ui(rhs.get_mpz_t(), BigInt(n - 1).get_mpz_t(), static_cast<unsigned long>(i));
        rhs += (i % 2 ? -1 : 1) * (n - 1);
        if (z_generator_poly(i, n).coefficient(e) * n != Rational(rhs)) {
          return "i=" + std::to_string(i) + " n=" + std::to_string(n);
        }
      }
    }
    return std::string();
  });
  run_check(r, suite, "gamma equals rectangle counts and is palindromic, a <= 12, n <= 6", []() -> std::string {
    for (int n = 1; n <= 6; ++n) {
      for (int a = n; a <= 12; ++a) {
        const int top = n * (a - n);
        for (int i = 0; i <= top; ++i) {
          if (gamma(a, n, i) != count_partitions_in_rectangle(n, a - n, i)) return "gamma mismatch";
          if (gamma(a, n, i) != gamma(a, n, top - i)) return "gamma not palindromic";
        }
      }
    }
    return std::string();
  });
  run_check(r, suite, "graded dimensions: sum_(j<=m) c_j = #partitions of m into <= n parts, m <= 12, n <= 5", []() -> std::string {
    for (int n = 2; n <= 5; ++n) {
      BigInt cumulative = 0;
      for (int m = 0; m <= 12; ++m) {
        cumulative += count_lw_solutions(n, m);
        if (cumulative != count_partitions_in_rectangle(n, m, m)) return "m=" + std::to_string(m);
      }
    }
    return std::string();
  });
  run_check(r, suite, "n = 3 multiplicities 1,0,1,1,1,1,2,1,2,2,2 and c_i = c_(i-2)+c_(i-3)-c_(i-5), i <= 30", []() -> std::string {
    const std::vector<int> expected{1, 0, 1, 1, 1, 1, 2, 1, 2, 2, 2};
    for (int i = 0; i <= 10; ++i) {
      if (count_lw_solutions(3, i) != expected[static_cast<std::size_t>(i)]) return "c_" + std::to_string(i);
    }
    for (int i = 5; i <= 30; ++i) {
      if (count_lw_solutions(3, i) !=
          count_lw_solutions(3, i - 2) + count_lw_solutions(3, i - 3) - count_lw_solutions(3, i - 5)) {
        return "recurrence at " + std::to_string(i);
      }
    }
    return std::string();
  });
  run_check(r, suite, "dim Lambda_n^(d) = binomial(n+d, n), n, d <= 6", []() -> std::string {
    for (int n = 0; n <= 6; ++n) {
      for (int d = 0; d <= 6; ++d) {
        if (BigInt(static_cast<unsigned long>(partitions_in_rectangle(n, d).size())) != binomial(n + d, n)) {
          return "n=" + std::to_string(n) + " d=" + std::to_string(d);
        }
      }
    }
    return std::string();
  });
}

// --------------------------------------------------------------------- tables

WeightedDecomposition table(std::initializer_list<std::pair<int, int>> entries) {
  WeightedDecomposition dec;
  for (auto [w, m] : entries) dec.multiplicities.emplace(w, m);
  return dec;
}

Character sym_power_character(int n, int d) {
  // monomials v_0^{α_0}···v_d^{α_d}, |α| = n, weight Σ α_i (2i − d)
  Character ch;
  std::function<void(int, int, int)> fill = [&](int slot, int remaining, int weight) {
    if (slot == d) {
      ch.multiplicities[weight + remaining * (2 * slot - d)] += 1;
      return;
    }
    for (int k = 0; k <= remaining; ++k) fill(slot + 1, remaining - k, weight + k * (2 * slot - d));
  };
  fill(0, n, 0);
  return ch;
}

void suite_tables(VerifyReport& r) {
  const std::string suite = "tables";
  run_check(r, suite, "Lambda_3^(d) tables for d = 2..8", []() -> std::string {
    const std::vector<WeightedDecomposition> expected{
        table({{6, 1}, {2, 1}}),
        table({{3, 1}, {5, 1}, {9, 1}}),
        table({{0, 1}, {4, 1}, {6, 1}, {8, 1}, {12, 1}}),
        table({{3, 1}, {5, 1}, {7, 1}, {9, 1}, {11, 1}, {15, 1}}),
        table({{2, 1}, {6, 2}, {8, 1}, {10, 1}, {12, 1}, {14, 1}, {18, 1}}),
        table({{3, 1}, {5, 1}, {7, 1}, {9, 2}, {11, 1}, {13, 1}, {15, 1}, {17, 1}, {21, 1}}),
        table({{0, 1}, {4, 1}, {6, 1}, {8, 2}, {10, 1}, {12, 2}, {14, 1}, {16, 1}, {18, 1}, {20, 1}, {24, 1}})};
    for (int d = 2; d <= 8; ++d) {
      const auto computed = decompose_finite(3, d);
      if (computed != expected[static_cast<std::size_t>(d - 2)]) {
        return "d=" + std::to_string(d) + ": computed " + decomposition_string(computed);
      }
    }
    return std::string();
  });
  run_check(r, suite, "character peeling equals Sylvester-Cayley, n, d <= 5", []() -> std::string {
    for (int n = 0; n <= 5; ++n) {
      for (int d = 0; d <= 5; ++d) {
        const auto dec = decompose_finite(n, d);
        for (int i = 0; i <= n * d + 1; ++i) {
          if (dec.multiplicity(i) != sylvester_cayley(n, d, i)) {
            return "n=" + std::to_string(n) + " d=" + std::to_string(d) + " i=" + std::to_string(i);
          }
        }
      }
    }
    return std::string();
  });
  run_check(r, suite, "Char Lambda_n^(d) = Char Sym^n(V_d), n, d <= 5", []() -> std::string {
    for (int n = 0; n <= 5; ++n) {
      for (int d = 0; d <= 5; ++d) {
        if (character_finite(n, d) != sym_power_character(n, d)) return "n=" + std::to_string(n) + " d=" + std::to_string(d);
      }
    }
    return std::string();
  });
  run_check(r, suite, "sum c_n(d,i)(i+1) = binomial(n+d, n), n, d <= 6", []() -> std::string {
    for (int n = 0; n <= 6; ++n) {
      for (int d = 0; d <= 6; ++d) {
        BigInt dim = 0;
        for (int i = 0; i <= n * d; ++i) dim += sylvester_cayley(n, d, i) * (i + 1);
        if (dim != binomial(n + d, n)) return "n=" + std::to_string(n) + " d=" + std::to_string(d);
      }
    }
    return std::string();
  });
  run_check(r, suite, "lowest weight space weights match c_n(d,i), n, d <= 4", []() -> std::string {
    for (int n = 1; n <= 4; ++n) {
      for (int d = 0; d <= 4; ++d) {
        std::map<int, BigInt> counts;
        for (const auto& v : lowest_weight_space_rho2(n, d)) counts[-v.weight] += 1;
        for (int i = 0; i <= n * d; ++i) {
          const auto it = counts.find(i);
          const BigInt got = it == counts.end() ? BigInt(0) : it->second;
          if (got != sylvester_cayley(n, d, i)) return "n=" + std::to_string(n) + " d=" + std::to_string(d);
        }
      }
    }
    return std::string();
  });
  run_check(r, suite, "w_i realize V_d in Lambda_d^(1), d <= 8", []() -> std::string {
    for (int d = 1; d <= 8; ++d) {
      const auto w = vd_realization(d);
      for (int i = 0; i <= d; ++i) {
        const auto& wi = w[static_cast<std::size_t>(i)];
        const SchurVector lowerExpected = i == 0 ? SchurVector(d) : w[static_cast<std::size_t>(i - 1)] * Rational(i);
        const SchurVector raiseExpected = i == d ? SchurVector(d) : w[static_cast<std::size_t>(i + 1)] * Rational(d - i);
        if (act_rho2(SlOp::lower, wi, 1) != lowerExpected) return "lower, d=" + std::to_string(d);
        if (act_rho2(SlOp::raise, wi, 1) != raiseExpected) return "raise, d=" + std::to_string(d);
        if (act_rho2(SlOp::cartan, wi, 1) != wi * Rational(2 * i - d)) return "cartan, d=" + std::to_string(d);
      }
    }
    return std::string();
  });
  r.discrepancies.push_back({"Lambda_2^(2) decomposition",
                             "character q^-4 + q^-2 + 2 + q^2 + q^4 peels to " + decomposition_string(decompose_finite(2, 2)),
                             "Char(V_2) + Char(V_4), i.e. V2 + V4"});
}

// ---------------------------------------------------------------------- kerov

void suite_kerov(VerifyReport& r) {
  const std::string suite = "kerov";
  run_check(r, suite, "[D,U] = L, [L,U] = 2U, [L,D] = -2D on |lambda| <= 7 for 5 rational (z, z')", []() -> std::string {
    constexpr int cutoff = 8;
    std::mt19937 rng(20241015);
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 9);
    for (int sample = 0; sample < 5; ++sample) {
      const KerovParams params{make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))};
      const auto apply = [&](KerovOp op, const DiagramVector& v) { return kerov_apply(op, v, params, cutoff); };
      for (const Partition& l : partitions_up_to(cutoff - 1, cutoff - 1)) {
        const auto y = DiagramVector::diagram(l);
        const auto U = apply(KerovOp::U, y);
        const auto L = apply(KerovOp::L, y);
        const auto D = apply(KerovOp::D, y);
        if (apply(KerovOp::D, U) - apply(KerovOp::U, D) != L) return "[D,U] on " + l.to_string();
        if (apply(KerovOp::L, U) - apply(KerovOp::U, L) != U * Rational(2)) return "[L,U] on " + l.to_string();
        if (apply(KerovOp::L, D) - apply(KerovOp::D, L) != D * Rational(-2)) return "[L,D] on " + l.to_string();
      }
    }
    return std::string();
  });
  run_check(r, suite, "U leaves the diagrams with at most n rows: U(1^n) has n+1 rows, n <= 4", []() -> std::string {
    const KerovParams params{Rational(1, 2), Rational(3)};
    for (int n = 1; n <= 4; ++n) {
      const Partition column(std::vector<int>(static_cast<std::size_t>(n), 1));
      const auto image = kerov_apply(KerovOp::U, DiagramVector::diagram(column), params, n + 1);
      const bool escapes = std::any_of(image.terms().begin(), image.terms().end(),
                                       [n](const auto& t) { return t.first.length() == n + 1; });
      if (!escapes) return "no witness for n=" + std::to_string(n);
    }
    return std::string();
  });
  run_check(r, suite, "transported zeta^alpha of degree <= 5 are annihilated by hat lowering, n <= 4", []() -> std::string {
    for (int n = 2; n <= 4; ++n) {
      for (int m = 0; m <= 5; ++m) {
        for (const AlphaTuple& alpha : alpha_tuples_of_degree(n, m)) {
          const auto z = zeta_monomial(alpha, n);
          if (!hat_apply(SlOp::lower, z, n).is_zero()) return "degree " + std::to_string(m);
          if (hat_apply(SlOp::cartan, z, n) != z * Rational(weight_of_alpha(alpha))) return "weight";
        }
      }
    }
    return std::string();
  });
}

}  // namespace

VerifyReport run_verify_suite(const std::string& suite) {
  const auto& names = verify_suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    throw InvalidInput("unknown verify suite '" + suite + "'");
  }
  VerifyReport report;
  const bool all = suite == "all";
  if (all || suite == "commutators") suite_commutators(report);
  if (all || suite == "schur-action") suite_schur_action(report);
  if (all || suite == "kernel") suite_kernel(report);
  if (all || suite == "identities") suite_identities(report);
  if (all || suite == "tables") suite_tables(report);
  if (all || suite == "kerov") suite_kerov(report);
  return report;
}

}  // namespace sl2sym
