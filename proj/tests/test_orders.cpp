#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"

using namespace signcox;
using testutil::all_sign_patterns;
using testutil::cycle;
using testutil::line;
using testutil::mat;

TEST_CASE("bound on finite orders of integer matrices", "[orders]") {
  // first values: 2, 6, 6, 12, 12, 30, 30, 60
  CHECK(torsion_bound(1) == 2);
  CHECK(torsion_bound(2) == 6);
  CHECK(torsion_bound(3) == 6);
  CHECK(torsion_bound(4) == 12);
  CHECK(torsion_bound(5) == 12);
  CHECK(torsion_bound(6) == 30);  // lcm(6, 5): phi(6) + phi(5) = 2 + 4 = 6
  CHECK(torsion_bound(7) == 30);
  CHECK(torsion_bound(8) == 60);
  CHECK(torsion_bound(0) == 1);  // the empty matrix is the identity

  // witnesses: companion matrices of x^2 - x + 1 and x^4 - x^2 + 1 realize
  // the sharp orders 6 and 12 in dimensions 2 and 4
  CHECK(matrix_order(mat({{0, -1}, {1, 1}})).value == 6);
  CHECK(matrix_order(mat({{0, 0, 0, -1},
                          {1, 0, 0, 0},
                          {0, 1, 0, 1},
                          {0, 0, 1, 0}}))
            .value == 12);
}

TEST_CASE("orders of small integer matrices", "[orders]") {
  OrderResult id = matrix_order(ExactMatrix::identity(3));
  CHECK(id.finite);
  CHECK(id.value == 1);

  OrderResult neg = matrix_order(Int(-1) * ExactMatrix::identity(4));
  CHECK(neg.finite);
  CHECK(neg.value == 2);

  OrderResult rot = matrix_order(mat({{0, -1}, {1, 0}}));
  CHECK(rot.finite);
  CHECK(rot.value == 4);

  CHECK_FALSE(matrix_order(mat({{1, 1}, {0, 1}})).finite);   // unipotent
  CHECK_FALSE(matrix_order(mat({{1, 1}, {1, 0}})).finite);   // golden ratio
  CHECK_THROWS_AS(matrix_order(mat({{2, 0}, {0, 1}})), PreconditionError);
}

TEST_CASE("reported order is minimal", "[orders]") {
  for (const ExactMatrix& m :
       {mat({{0, -1}, {1, 1}}), mat({{0, -1}, {1, 0}}),
        mat({{0, -1}, {1, -1}})}) {
    OrderResult r = matrix_order(m);
    REQUIRE(r.finite);
    for (unsigned long d = 1; d < r.value; ++d)
      if (r.value % d == 0) CHECK_FALSE(matpow(m, d).is_identity());
    CHECK(matpow(m, r.value).is_identity());
  }
}

TEST_CASE("pair orders on short lines", "[orders]") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& signs : all_sign_patterns(n)) {
      Representation rep = make_representation(line(signs));
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          OrderResult r = element_order(rep, {i, j}, true);
          INFO("n=" << n << " i=" << i << " j=" << j);
          if (j - i >= 2) {
            REQUIRE(r.finite);
            REQUIRE(r.value == 2);
          } else if (signs[i - 1] == signs[j - 1]) {
            REQUIRE(r.finite);
            REQUIRE(r.value == 3);
          } else {
            REQUIRE_FALSE(r.finite);
          }
        }
    }
}

TEST_CASE("accelerated and plain order computations agree", "[orders]") {
  std::mt19937 rng(41);
  for (const SignedCoxeterGraph& g :
       {line({1, -1, 1}), cycle({1, -1, 1, -1}), cycle({-1, -1, -1})}) {
    Representation rep = make_representation(g);
    std::uniform_int_distribution<int> vdist(1, g.n), ldist(1, 6);
    for (int t = 0; t < 70; ++t) {
      Word w;
      for (int u = ldist(rng); u > 0; --u) w.push_back(vdist(rng));
      OrderResult fast = element_order(rep, w, true);
      OrderResult slow = element_order(rep, w, false);
      INFO("word " << word_to_string(w));
      REQUIRE(fast.finite == slow.finite);
      if (fast.finite) REQUIRE(fast.value == slow.value);
    }
  }
}

TEST_CASE("orders of words in the reflection representation", "[orders]") {
  Representation mixed = make_representation(line({1, -1}));
  CHECK_FALSE(element_order(mixed, {1, 2}).finite);
  CHECK(element_order(mixed, {1}).value == 2);
  CHECK(element_order(mixed, {}).value == 1);

  Representation c5 = make_representation(cycle({-1, -1, -1, -1, -1}));
  CHECK(element_order(c5, {1, 2}).value == 3);
  CHECK(element_order(c5, {5, 1}).value == 3);  // the wrap edge braids too
  CHECK(element_order(c5, {1, 3}).value == 2);

  CHECK_THROWS_AS(element_order(c5, {0}), PreconditionError);
  CHECK_THROWS_AS(element_order(c5, {6}), PreconditionError);
}
