#include <doctest.h>

#include "sl2sym/errors.hpp"
#include "sl2sym/poly.hpp"

using namespace sl2sym;

TEST_CASE("polynomial arithmetic") {
  const Poly x = Poly::variable(2, 1);
  const Poly y = Poly::variable(2, 2);
  const Poly sq = pow(x + y, 2);
  CHECK(sq.coefficient({1, 1}) == 2);
  CHECK(sq.total_degree() == 2);
  CHECK((x - x).is_zero());
  CHECK(Poly(2).total_degree() == -1);
  CHECK(partial(x * x * y, 1) == x * y * Rational(2));
  CHECK_THROWS_AS(x + Poly::variable(3, 1), InvalidInput);
}

TEST_CASE("first representation on x1^2") {
  const Poly f = Poly::monomial({2, 0});
  CHECK(rho1_apply(SlOp::lower, f) == Poly::monomial({1, 0}, -2));
  CHECK(rho1_apply(SlOp::cartan, f) == Poly::monomial({2, 0}, 4));
  CHECK(rho1_apply(SlOp::raise, f) == Poly::monomial({3, 0}, 2));
}

TEST_CASE("second representation on constants") {
  const Poly one = Poly::constant(2, 1);
  CHECK(rho2_apply(SlOp::lower, one, 2).is_zero());
  CHECK(rho2_apply(SlOp::cartan, one, 2) == Poly::constant(2, -4));
  CHECK(rho2_apply(SlOp::raise, one, 2) == power_sum_poly(1, 2) * Rational(2));
  // x^d is killed by raising in one variable
  CHECK(rho2_apply(SlOp::raise, Poly::monomial({3}), 3).is_zero());
}

TEST_CASE("named symmetric polynomials") {
  const Poly x = Poly::variable(3, 1), y = Poly::variable(3, 2), z = Poly::variable(3, 3);
  CHECK(elementary_poly(2, 3) == x * y + x * z + y * z);
  CHECK(power_sum_poly(2, 3) == x * x + y * y + z * z);
  CHECK(homogeneous_poly(2, 2) == Poly::monomial({2, 0}) + Poly::monomial({1, 1}) + Poly::monomial({0, 2}));
  CHECK_THROWS_AS(elementary_poly(4, 3), InvalidInput);
  CHECK(is_symmetric(x * y * z));
  CHECK_FALSE(is_symmetric(x));
  CHECK(within_degree_bound(x * x * y, 2));
  CHECK_FALSE(within_degree_bound(x * x * x, 2));
}

TEST_CASE("alternants") {
  CHECK(alternant({1, 0}) == Poly::variable(2, 1) - Poly::variable(2, 2));
  CHECK(alternant({1, 1}).is_zero());
}

TEST_CASE("z generators") {
  const Poly p1 = power_sum_poly(1, 3);
  CHECK(z_generator_poly(2, 3) == power_sum_poly(2, 3) * Rational(3) - p1 * p1);
  const Poly diff = Poly::variable(2, 1) - Poly::variable(2, 2);
  CHECK(z_generator_poly(2, 2) == diff * diff);
  CHECK(rho1_apply(SlOp::lower, z_generator_poly(3, 3)).is_zero());
}

TEST_CASE("slice map") {
  CHECK(sigma_slice(power_sum_poly(1, 3)).is_zero());
  CHECK(sigma_slice(Poly::constant(3, 5)) == Poly::constant(3, 5));
  CHECK_THROWS_AS(sigma_slice(Poly::variable(2, 1)), InvalidInput);
}
