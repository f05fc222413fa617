#include "derivkit/combinatorics.hpp"

#include "enumeration_oracles.hpp"

#include <doctest.h>

using namespace derivkit;

TEST_CASE("factorial basics") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(10) == 3628800);
}

TEST_CASE("double factorial conventions and values") {
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(0) == 1);
  CHECK(double_factorial(7) == 105);
  CHECK(double_factorial(8) == 384);
  CHECK_THROWS_AS(double_factorial(-2), std::invalid_argument);
}

TEST_CASE("double factorial splits the factorial") {
  for (long n = 1; n <= 200; ++n)
    CHECK(double_factorial(n) * double_factorial(n - 1) ==
          factorial(static_cast<unsigned>(n)));
}

TEST_CASE("binomial") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);

  // Pascal recurrence, exhaustive on a small triangle.
  for (unsigned n = 1; n <= 25; ++n)
    for (long k = 1; k < static_cast<long>(n); ++k)
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("lah numbers match the ordered-list partition count") {
  CHECK(lah(1, 1) == 1);
  CHECK(lah(3, 2) == 6);
  CHECK(lah(4, 1) == 24);
  CHECK_THROWS_AS(lah(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(lah(3, 0), std::invalid_argument);

  for (unsigned n = 1; n <= 8; ++n)
    for (unsigned k = 1; k <= n; ++k)
      CHECK(lah(n, k) == oracles::count_list_partitions(n, k));
}

TEST_CASE("stirling2 against enumeration and the triangle recurrence") {
  CHECK(stirling2(3, 3) == 1);
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling2(5, 3) == 25);
  CHECK(stirling2(4, 2) == oracles::count_set_partitions(4, 2));
  CHECK_THROWS_AS(stirling2(2, 3), std::invalid_argument);

  for (unsigned n = 1; n <= 9; ++n)
    for (unsigned k = 1; k <= n; ++k)
      CHECK(stirling2(n, k) == oracles::count_set_partitions(n, k));
  for (unsigned n = 1; n <= 30; ++n)
    for (unsigned k = 1; k <= n; ++k)
      CHECK(stirling2(n, k) == stirling2_recurrence(n, k));
}

TEST_CASE("alpha and beta coefficients") {
  CHECK(alpha_pq(1, 0) == 2);
  CHECK(alpha_pq(2, 0) == 0);
  CHECK(beta_pq(2, 0) == 0);
  CHECK(beta_pq(1, 0) == -2);
  CHECK_THROWS_AS(alpha_pq(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(beta_pq(2, 3), std::invalid_argument);

  // Values pinned by the derivative checks of tan/cot at low orders:
  // tan'' cos^3 = 2 sin x, tan''' cos^4 = 4 - 2 cos 2x, cot'''' sin^5 = 22 cos x + 2 cos 3x.
  CHECK(alpha_pq(2, 1) == 2);
  CHECK(alpha_pq(3, 0) == 8);
  CHECK(alpha_pq(3, 2) == -2);
  CHECK(alpha_pq(4, 1) == 22);
  CHECK(alpha_pq(4, 3) == -2);
  CHECK(beta_pq(4, 1) == 22);
  CHECK(beta_pq(4, 3) == 2);

  for (unsigned p = 1; p <= 25; ++p) {
    for (unsigned q = 0; q < p; ++q) {
      if ((p - q) % 2 == 0) {
        CHECK(alpha_pq(p, q) == 0);
        CHECK(beta_pq(p, q) == 0);
      }
    }
  }
}
