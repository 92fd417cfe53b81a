#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace signcox;

TEST_CASE("recurrence values for the parameter grid", "[dickson]") {
  // x = 1, alpha = 1: 1, 1, 0, -1, -1, 0 repeating with period 6
  const long p6[6] = {1, 1, 0, -1, -1, 0};
  for (unsigned long n = 0; n <= 48; ++n)
    CHECK(dickson_e(n, 1, 1) == p6[n % 6]);

  // x = 1, alpha = -1: Fibonacci 1, 1, 2, 3, 5, 8, ...
  Int a = 0, b = 1;
  for (unsigned long n = 0; n <= 30; ++n) {
    CHECK(dickson_e(n, 1, -1) == b);
    Int next = a + b;
    a = b;
    b = next;
  }

  // x = 0: e_{2k} = (-alpha)^k, e_{2k+1} = 0
  for (unsigned long n = 0; n <= 20; ++n) {
    if (n % 2 == 1) {
      CHECK(dickson_e(n, 0, 1) == 0);
      CHECK(dickson_e(n, 0, -1) == 0);
    } else {
      CHECK(dickson_e(n, 0, 1) == ((n / 2) % 2 == 0 ? 1 : -1));
      CHECK(dickson_e(n, 0, -1) == 1);
    }
  }

  // x = +-2, alpha = 1: e_n = (+-1)^n (n + 1), never zero
  for (unsigned long n = 0; n <= 24; ++n) {
    CHECK(dickson_e(n, 2, 1) == Int(n + 1));
    CHECK(dickson_e(n, -2, 1) == (n % 2 == 0 ? Int(n + 1) : Int(-(long)(n + 1))));
  }

  // x = 2, alpha = -1: Pell numbers 1, 2, 5, 12, 29, 70
  const long pell[6] = {1, 2, 5, 12, 29, 70};
  for (unsigned long n = 0; n < 6; ++n) CHECK(dickson_e(n, 2, -1) == pell[n]);

  // a spot value outside the special grid
  CHECK(dickson_e(3, 10, 1) == 980);  // 10^3 - 2*10 = 980
}

TEST_CASE("query overload matches the scalar form", "[dickson]") {
  for (long x : {-2L, 0L, 1L, 2L})
    for (int alpha : {1, -1})
      for (unsigned long n = 0; n <= 10; ++n)
        CHECK(dickson_e(n, DicksonQuery{x, alpha}) == dickson_e(n, x, alpha));
}

TEST_CASE("odd-index quotient by the argument", "[dickson]") {
  // x * (E_{2r-1}(x, alpha) / x) recovers E_{2r-1} itself; checked over a
  // window wide enough to exercise the skip recurrence several times over.
  for (long x : {-3L, -2L, -1L, 0L, 1L, 2L, 3L})
    for (long alpha : {-2L, -1L, 1L, 2L})
      for (unsigned long r = 1; r <= 10; ++r)
        CHECK(Int(x) * dickson_e_over_x(2 * r - 1, x, alpha) ==
              dickson_e(2 * r - 1, x, alpha));

  // at x = 0 the quotient survives while E itself vanishes:
  // G_r(0, 1) = (-1)^(r-1) * r from G_r = -2 G_{r-1} - G_{r-2}
  for (unsigned long r = 1; r <= 8; ++r)
    CHECK(dickson_e_over_x(2 * r - 1, 0, 1) ==
          (r % 2 == 1 ? Int(r) : -Int(r)));

  CHECK(dickson_e_over_x(1, 2, 1) == 1);
  CHECK(dickson_e_over_x(3, 2, 1) == 2);    // (x^3 - 2x)/x at x = 2
  CHECK(dickson_e_over_x(5, 2, -1) == 35);  // half of the Pell value 70
  CHECK_THROWS_AS(dickson_e_over_x(4, 2, 1), PreconditionError);
  CHECK_THROWS_AS(dickson_e_over_x(0, 2, 1), PreconditionError);
}

TEST_CASE("first vanishing index across the grid", "[dickson]") {
  CHECK(minimal_relation_exponent({1, 1}) == 3UL);    // e_2 = 0
  CHECK(minimal_relation_exponent({0, 1}) == 2UL);    // e_1 = 0
  CHECK(minimal_relation_exponent({0, -1}) == 2UL);
  CHECK_FALSE(minimal_relation_exponent({1, -1}).has_value());
  CHECK_FALSE(minimal_relation_exponent({2, 1}).has_value());
  CHECK_FALSE(minimal_relation_exponent({-2, 1}).has_value());
  CHECK_FALSE(minimal_relation_exponent({2, -1}).has_value());
  CHECK_FALSE(minimal_relation_exponent({-2, -1}).has_value());
}

TEST_CASE("the scan is consistent with direct evaluation", "[dickson]") {
  for (long x : {-2L, 0L, 1L, 2L})
    for (int alpha : {1, -1}) {
      auto r = minimal_relation_exponent({x, alpha});
      if (r) {
        CHECK(dickson_e(*r - 1, x, alpha) == 0);
        for (unsigned long n = 1; n + 1 < *r; ++n)
          CHECK(dickson_e(n, x, alpha) != 0);
      } else {
        for (unsigned long n = 1; n <= 48; ++n)
          CHECK(dickson_e(n, x, alpha) != 0);
      }
    }
}

TEST_CASE("parameters outside the grid are rejected", "[dickson]") {
  CHECK_THROWS_AS(minimal_relation_exponent({5, 1}), PreconditionError);
  CHECK_THROWS_AS(minimal_relation_exponent({1, 0}), PreconditionError);
  CHECK_THROWS_AS(minimal_relation_exponent({1, 2}), PreconditionError);
}
