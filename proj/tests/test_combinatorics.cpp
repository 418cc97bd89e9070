#include <doctest.h>

#include "sl2sym/combinatorics.hpp"
#include "sl2sym/errors.hpp"

using namespace sl2sym;

TEST_CASE("partition validation and printing") {
  CHECK(Partition({2, 1, 0}).parts() == std::vector<int>{2, 1});
  CHECK(Partition{}.to_string() == "()");
  CHECK(Partition({3, 1, 1}).to_string() == "(3,1,1)");
  CHECK(Partition({3, 1, 1}).size() == 5);
  CHECK_THROWS_AS(Partition({1, 2}), InvalidInput);
  CHECK_THROWS_AS(Partition({2, 0, 1}), InvalidInput);
  CHECK_THROWS_AS(Partition({-1}), InvalidInput);
  CHECK(Partition({2}) > Partition({1, 1}));
}

TEST_CASE("corners are listed top to bottom") {
  const Partition l{2, 1};
  CHECK(addable_corners(l, 3) == std::vector<Cell>{{1, 3}, {2, 2}, {3, 1}});
  CHECK(addable_corners(l, 2) == std::vector<Cell>{{1, 3}, {2, 2}});
  CHECK(removable_corners(l) == std::vector<Cell>{{1, 2}, {2, 1}});
  CHECK_THROWS_AS(addable_corners(Partition{1, 1, 1}, 2), InvalidInput);
  CHECK(content(Cell{2, 1}) == -1);
  CHECK(l.with_cell({2, 2}) == Partition{2, 2});
  CHECK(l.without_cell({1, 2}) == Partition{1, 1});
}

TEST_CASE("partitions in a box") {
  const std::vector<Partition> four{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  CHECK(partitions_in_box(4, 4) == four);
  CHECK(partitions_in_box(4, 2).size() == 3);
  CHECK(partitions_in_box(4, 4, 2) == std::vector<Partition>{{2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
  CHECK(partitions_in_box(0, 3) == std::vector<Partition>{Partition{}});
  CHECK(partitions_in_rectangle(3, 2).size() == 10);
  CHECK(count_partitions_in_rectangle(2, 2, 2) == 2);
  CHECK(count_partitions_in_rectangle(3, 3, 4) == 3);
}

TEST_CASE("gamma is a Gaussian binomial coefficient") {
  // [4 choose 2]_T = 1 + T + 2T^2 + T^3 + T^4
  const int expected[] = {1, 1, 2, 1, 1, 0};
  for (int i = 0; i < 6; ++i) CHECK(gamma(4, 2, i) == expected[i]);
  CHECK_THROWS_AS(gamma(4, 0, 0), InvalidInput);
  CHECK_THROWS_AS(gamma(2, 3, 0), InvalidInput);
}

TEST_CASE("Sylvester-Cayley multiplicities") {
  // Sym^3(V_2) = V6 + V2
  CHECK(sylvester_cayley(3, 2, 6) == 1);
  CHECK(sylvester_cayley(3, 2, 2) == 1);
  CHECK(sylvester_cayley(3, 2, 4) == 0);
  CHECK(sylvester_cayley(3, 2, 0) == 0);
  CHECK(sylvester_cayley(3, 2, 5) == 0);
  CHECK(sylvester_cayley(3, 2, 8) == 0);
  // Sym^2(V_2) = V4 + V0
  CHECK(sylvester_cayley(2, 2, 0) == 1);
  CHECK(sylvester_cayley(2, 2, 2) == 0);
  CHECK(sylvester_cayley(0, 5, 0) == 1);
  CHECK(sylvester_cayley(0, 5, 2) == 0);
}

TEST_CASE("lowest weight counts agree with brute force") {
  for (int i = 0; i <= 20; ++i) {
    long brute = 0;
    for (int a = 0; 2 * a <= i; ++a) {
      for (int b = 0; 2 * a + 3 * b <= i; ++b) {
        for (int c = 0; 2 * a + 3 * b + 4 * c <= i; ++c) brute += (2 * a + 3 * b + 4 * c == i);
      }
    }
    CHECK(count_lw_solutions(4, i) == brute);
  }
  CHECK(count_lw_solutions(2, 3) == 0);
  CHECK(count_lw_solutions(2, 4) == 1);
  CHECK_THROWS_AS(count_lw_solutions(1, 0), InvalidInput);
}

TEST_CASE("alpha tuples") {
  const auto tuples = alpha_tuples_of_degree(3, 6);
  REQUIRE(tuples.size() == 2);
  CHECK(tuples[0].exponents == std::vector<int>{0, 2});
  CHECK(tuples[1].exponents == std::vector<int>{3, 0});
  CHECK(tuples[1].degree() == 6);
  CHECK(alpha_tuples_of_degree(3, 1).empty());
}
