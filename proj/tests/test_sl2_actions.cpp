#include <doctest.h>

#include "sl2sym/errors.hpp"
#include "sl2sym/sl2_actions.hpp"

using namespace sl2sym;

TEST_CASE("first representation on Schur functions") {
  const SchurVector s21 = SchurVector::basis({2, 1}, 3);
  CHECK(act_rho1(SlOp::lower, s21) == SchurVector::basis({2}, 3) * Rational(-2) + SchurVector::basis({1, 1}, 3) * Rational(-4));
  CHECK(act_rho1(SlOp::cartan, s21) == s21 * Rational(6));
  CHECK(act_rho1(SlOp::raise, SchurVector::basis({1}, 2)) == SchurVector::basis({2}, 2) - SchurVector::basis({1, 1}, 2));
  CHECK(act_rho1(SlOp::lower, SchurVector::unit(3)).is_zero());
}

TEST_CASE("second representation on Schur functions") {
  // n = 2, d = 1: 1 -> s1 -> s11 spans V2
  const SchurVector one = SchurVector::unit(2);
  CHECK(act_rho2(SlOp::cartan, one, 1) == one * Rational(-2));
  CHECK(act_rho2(SlOp::raise, one, 1) == SchurVector::basis({1}, 2));
  CHECK(act_rho2(SlOp::raise, SchurVector::basis({1}, 2), 1) == SchurVector::basis({1, 1}, 2) * Rational(2));
  CHECK(act_rho2(SlOp::raise, SchurVector::basis({1, 1}, 2), 1).is_zero());
  CHECK_THROWS_AS(act_rho2(SlOp::lower, SchurVector::basis({2}, 2), 1), InvalidInput);
}

TEST_CASE("closed forms on named families") {
  CHECK(act_rho1_named(SlOp::lower, NamedFamily::power_sum, 1, 3) == SchurVector::unit(3) * Rational(-3));
  CHECK(act_rho1_named(SlOp::raise, NamedFamily::power_sum, 2, 3) == power_sum_schur(3, 3) * Rational(2));
  CHECK(act_rho1_named(SlOp::lower, NamedFamily::elementary, 2, 3) == elementary_schur(1, 3) * Rational(-2));
}

TEST_CASE("finite decompositions") {
  CHECK(decompose_finite(3, 2).multiplicities == std::map<int, BigInt>{{2, 1}, {6, 1}});
  CHECK(decompose_finite(2, 2).multiplicities == std::map<int, BigInt>{{0, 1}, {4, 1}});
  CHECK(decompose_finite(3, 2).finite_dimension() == 10);
  const Character ch = character_finite(2, 1);
  CHECK(ch.multiplicities == std::map<int, BigInt>{{-2, 1}, {0, 1}, {2, 1}});
  Character bad;
  bad.multiplicities = {{0, 1}, {2, 1}};
  CHECK_THROWS_AS(peel_character(bad), InternalError);
}

TEST_CASE("lowest weight spaces") {
  const auto k2 = lowest_weight_space_rho1(2, 2);
  REQUIRE(k2.size() == 1);
  CHECK(k2[0].weight == 4);
  CHECK(lowest_weight_space_rho1(2, 3).empty());
  CHECK(lowest_weight_space_rho1(3, 6).size() == 2);
  const auto basis = lowest_weight_basis_rho1(3, 3);
  REQUIRE(basis.size() == 3);
  CHECK(basis[1].vector == z_generator_schur(2, 3));
  CHECK(weight_of_alpha(AlphaTuple{{1, 1}}) == 10);
  CHECK(decompose_lambda_n(3, 6).multiplicity(6) == 2);
  CHECK(lowest_weight_space_rho2(3, 2).size() == 2);
}

TEST_CASE("V_d realization") {
  const auto w = vd_realization(2);
  REQUIRE(w.size() == 3);
  CHECK(w[0] == SchurVector::unit(2));
  CHECK(w[2] == elementary_schur(2, 2));
}

TEST_CASE("operator matrices") {
  const auto raise = [](const SchurVector& v) { return act_rho1(SlOp::raise, v); };
  const auto m = operator_matrix(raise, partitions_in_box(1, 2), partitions_in_box(2, 2), 2);
  CHECK(m.rows() == 2);
  CHECK(m(0, 0) == 1);
  CHECK(m(1, 0) == -1);
}
