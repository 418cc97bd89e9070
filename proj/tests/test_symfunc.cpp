#include <doctest.h>

#include "sl2sym/errors.hpp"
#include "sl2sym/symfunc.hpp"

using namespace sl2sym;

TEST_CASE("Schur polynomials from tableaux") {
  CHECK(schur_to_poly({2, 1}, 2) == Poly::monomial({2, 1}) + Poly::monomial({1, 2}));
  CHECK(schur_to_poly({1, 1}, 3) == elementary_poly(2, 3));
  CHECK(schur_to_poly({3}, 2) == homogeneous_poly(3, 2));
  CHECK_THROWS_AS(schur_to_poly({1, 1, 1}, 2), InvalidInput);
  // s_(2,1)(x1,x2,x3) has 8 tableaux
  Rational total = 0;
  const Poly s21 = schur_to_poly({2, 1}, 3);
  for (const auto& [e, c] : s21.terms()) total += c;
  CHECK(total == 8);
}

TEST_CASE("Schur expansion") {
  const SchurVector p2 = poly_to_schur(power_sum_poly(2, 3));
  CHECK(p2 == SchurVector::basis({2}, 3) - SchurVector::basis({1, 1}, 3));
  CHECK(p2.to_string() == "1*s(2) - 1*s(1,1)");
  CHECK(SchurVector(3).to_string() == "0");
  CHECK_THROWS_AS(poly_to_schur(Poly::variable(2, 1)), InvalidInput);
  CHECK_THROWS_AS(SchurVector::basis({1, 1, 1}, 2), InvalidInput);
}

TEST_CASE("products") {
  const SchurVector s1 = SchurVector::basis({1}, 2);
  CHECK(multiply(s1, s1) == SchurVector::basis({2}, 2) + SchurVector::basis({1, 1}, 2));
  CHECK(pieri_e1(SchurVector::basis({1}, 1)) == SchurVector::basis({2}, 1));
  // Littlewood-Richardson: s21 * s1 = s31 + s22 + s211
  const SchurVector s21 = SchurVector::basis({2, 1}, 3);
  CHECK(multiply(s21, SchurVector::basis({1}, 3)) ==
        SchurVector::basis({3, 1}, 3) + SchurVector::basis({2, 2}, 3) + SchurVector::basis({2, 1, 1}, 3));
  CHECK(pow(s1, 0) == SchurVector::unit(2));
}

TEST_CASE("named families in the Schur basis") {
  CHECK(power_sum_schur(3, 2) == SchurVector::basis({3}, 2) - SchurVector::basis({2, 1}, 2));
  CHECK(elementary_schur(2, 3) == SchurVector::basis({1, 1}, 3));
  CHECK_THROWS_AS(elementary_schur(4, 3), InvalidInput);
  CHECK(homogeneous_schur(2, 1) == SchurVector::basis({2}, 1));
  for (int k = 1; k <= 5; ++k) CHECK(power_sum_schur(k, 3) == poly_to_schur(power_sum_poly(k, 3)));
}

TEST_CASE("z generators in the Schur basis") {
  // 3 p2 - p1^2 = 3(s2 - s11) - (s2 + s11)
  CHECK(z_generator_schur(2, 3) == SchurVector::basis({2}, 3) * Rational(2) - SchurVector::basis({1, 1}, 3) * Rational(4));
  for (int n = 2; n <= 4; ++n) {
    for (int i = 2; i <= n; ++i) CHECK(z_generator_schur(i, n) == poly_to_schur(z_generator_poly(i, n)));
  }
  CHECK(z_monomial_schur(AlphaTuple{{2, 0}}, 3) == pow(z_generator_schur(2, 3), 2));
  CHECK_THROWS_AS(z_monomial_schur(AlphaTuple{{1}}, 3), InvalidInput);
}
