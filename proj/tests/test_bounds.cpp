#include "burst/bounds.hpp"

#include <cmath>

#include "doctest.h"

using namespace burst;

TEST_CASE("ball size formula") {
  CHECK(ball_size_formula(5, 2, 2, 1) == 5);
  CHECK(ball_size_formula(3, 3, 1, 1) == 7);
  for (Symbol q = 2; q <= 5; ++q) CHECK(ball_size_formula(4, q, 4, 1) == q);
  CHECK_THROWS_AS(ball_size_formula(5, 2, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(ball_size_formula(5, 2, 6, 1), std::invalid_argument);
}

TEST_CASE("sphere packing redundancy") {
  CHECK(sphere_packing_redundancy(5, 2, 1, 1) == doctest::Approx(std::log2(6.0)).epsilon(1e-12));
  for (std::int64_t n = 1; n <= 20; ++n) CHECK(sphere_packing_redundancy(n, 2, 1, 1) == doctest::Approx(std::log2(n + 1.0)));
  for (int t = 1; t <= 4; ++t) CHECK(sphere_packing_redundancy(t, 3, t, 1) == doctest::Approx(t * std::log2(3.0)));
  CHECK_THROWS_AS(sphere_packing_redundancy(5, 2, 1, 0), std::invalid_argument);
  // nondecreasing in n
  for (std::int64_t n = 3; n < 30; ++n) CHECK(sphere_packing_redundancy(n + 1, 3, 2, 1) >= sphere_packing_redundancy(n, 3, 2, 1));
}

TEST_CASE("code redundancy") {
  CHECK(code_redundancy(16, 4, 2) == doctest::Approx(0.0));
  CHECK(code_redundancy(1, 4, 2) == doctest::Approx(4.0));
  CHECK(code_redundancy(5, 6, 2) == doctest::Approx(6.0 - std::log2(5.0)));
  CHECK_THROWS_AS(code_redundancy(0, 4, 2), std::invalid_argument);
}

TEST_CASE("csv rows") {
  CHECK(bound_csv_header() == "n,q,t,s,ball_size,min_redundancy_bits");
  CHECK(bound_csv_row(bound_report(5, 2, 2, 1)) == "5,2,2,1,5,3.321928");
  CHECK(max_code_size(5, 2, 1, 1) == 32 / 6);
}
