#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"

using namespace signcox;
using testutil::mat;

namespace {

// Independent determinant oracle: cofactor expansion along the first row.
// Exponential, fine for the small matrices it is used on.
Int det_cofactor(const ExactMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Int total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    ExactMatrix minor(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t jj = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == c) continue;
        minor(i - 1, jj++) = m(i, j);
      }
    }
    Int term = m(0, c) * det_cofactor(minor);
    total += (c % 2 == 0) ? term : -term;
  }
  return total;
}

ExactMatrix random_matrix(std::mt19937& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  ExactMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
  return m;
}

IntPolynomial poly(std::vector<long> low_first) {
  std::vector<Int> c(low_first.begin(), low_first.end());
  return IntPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("matrix basics", "[exact]") {
  ExactMatrix id = ExactMatrix::identity(3);
  CHECK(id.is_identity());
  CHECK_FALSE(id.is_zero());
  CHECK(ExactMatrix(3).is_zero());
  CHECK(matmul(id, id) == id);
  CHECK_THROWS_AS(matmul(id, ExactMatrix::identity(2)), PreconditionError);

  ExactMatrix a = mat({{1, 2}, {3, 4}});
  CHECK(transpose(a) == mat({{1, 3}, {2, 4}}));
  CHECK(a + a == mat({{2, 4}, {6, 8}}));
  CHECK(a - a == ExactMatrix(2));
  CHECK(Int(3) * a == mat({{3, 6}, {9, 12}}));
  CHECK(trace(a) == 5);
  CHECK(matmul(a, a) == mat({{7, 10}, {15, 22}}));
}

TEST_CASE("matmul is associative", "[exact]") {
  std::mt19937 rng(1234);
  for (int t = 0; t < 50; ++t) {
    ExactMatrix a = random_matrix(rng, 4, -5, 5);
    ExactMatrix b = random_matrix(rng, 4, -5, 5);
    ExactMatrix c = random_matrix(rng, 4, -5, 5);
    REQUIRE(matmul(matmul(a, b), c) == matmul(a, matmul(b, c)));
  }
}

TEST_CASE("matpow splits additively", "[exact]") {
  std::mt19937 rng(99);
  for (int t = 0; t < 20; ++t) {
    ExactMatrix a = random_matrix(rng, 3, -3, 3);
    std::uniform_int_distribution<unsigned long> kd(0, 6);
    unsigned long p = kd(rng), q = kd(rng);
    REQUIRE(matpow(a, p + q) == matmul(matpow(a, p), matpow(a, q)));
  }
  CHECK(matpow(mat({{2, 0}, {0, 2}}), 0).is_identity());
}

TEST_CASE("determinant matches cofactor expansion", "[exact]") {
  // hand-checked 3x3: 2*((-2)*2 - (-1)(-1)) - (-1)*((-1)*2 - 0) + 0
  //                 = 2*(-5) - 2 = -12
  ExactMatrix b = mat({{2, -1, 0}, {-1, -2, -1}, {0, -1, 2}});
  CHECK(det(b) == -12);
  CHECK(det_cofactor(b) == -12);

  CHECK(det(ExactMatrix::identity(4)) == 1);
  CHECK(det(ExactMatrix(3)) == 0);
  // singular with a zero pivot on the way
  CHECK(det(mat({{0, 1, 1}, {0, 2, 2}, {1, 0, 3}})) == 0);
  // row swap needed
  CHECK(det(mat({{0, 1}, {1, 0}})) == -1);

  std::mt19937 rng(7);
  for (int t = 0; t < 40; ++t) {
    ExactMatrix m = random_matrix(rng, 5, -4, 4);
    REQUIRE(det(m) == det_cofactor(m));
  }
}

TEST_CASE("determinant is multiplicative", "[exact]") {
  std::mt19937 rng(11);
  for (int t = 0; t < 30; ++t) {
    ExactMatrix a = random_matrix(rng, 4, -4, 4);
    ExactMatrix b = random_matrix(rng, 4, -4, 4);
    REQUIRE(det(matmul(a, b)) == det(a) * det(b));
  }
}

TEST_CASE("basis swap matrices", "[exact]") {
  ExactMatrix e = basis_swap_matrix(3, 1, 3);
  CHECK(e == mat({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
  CHECK(matmul(e, e).is_identity());
  CHECK(basis_swap_matrix(3, 2, 2).is_identity());
  CHECK_THROWS_AS(basis_swap_matrix(3, 0, 1), PreconditionError);
  CHECK_THROWS_AS(basis_swap_matrix(3, 1, 4), PreconditionError);
}

TEST_CASE("canonical keys separate matrices", "[exact]") {
  // adjacent entries that could blur together under naive concatenation
  ExactMatrix m1 = mat({{1, 23}, {0, 0}});
  ExactMatrix m2 = mat({{12, 3}, {0, 0}});
  CHECK(canonical_key(m1) != canonical_key(m2));
  CHECK(canonical_key(m1) == canonical_key(mat({{1, 23}, {0, 0}})));
  CHECK(canonical_key(mat({{-1, 0}, {0, 1}})) !=
        canonical_key(mat({{1, 0}, {0, -1}})));
  ExactMatrix big(2);
  big(0, 0) = Int("123456789012345678901234567890");
  big(1, 1) = 1;
  ExactMatrix big2 = big;
  big2(0, 0) += 1;
  CHECK(canonical_key(big) != canonical_key(big2));
}

TEST_CASE("polynomial arithmetic", "[exact]") {
  IntPolynomial zero;
  CHECK(zero.is_zero());
  CHECK(zero.degree() == -1);
  CHECK(poly({0, 0}).is_zero());

  IntPolynomial xp1 = poly({1, 1});
  IntPolynomial xm1 = poly({-1, 1});
  CHECK(poly_mul(xp1, xm1) == poly({-1, 0, 1}));
  CHECK(poly_add(xp1, xm1) == poly({0, 2}));
  CHECK(poly_sub(xp1, xp1).is_zero());
  CHECK(poly_divexact(poly({-1, 0, 1}), xm1) == xp1);
  CHECK_THROWS_AS(poly_divexact(poly({1, 1, 1}), poly({0, 2})),
                  PreconditionError);
  CHECK_THROWS_AS(poly_divexact(xp1, zero), PreconditionError);
  CHECK(poly_to_string(poly({1, 3, 2})) == "2*x^2 + 3*x + 1");
  CHECK(poly_to_string(poly({-1, 0, 1})) == "x^2 - 1");
  CHECK(poly_to_string(zero) == "0");
}

TEST_CASE("characteristic polynomial", "[exact]") {
  // oracle for 2x2: x^2 - tr x + det
  ExactMatrix a = mat({{-2, -1}, {-1, -1}});
  IntPolynomial expected = poly({det(a).convert_to<long>(),
                                 -trace(a).convert_to<long>(), 1});
  CHECK(char_poly(a) == expected);
  CHECK(char_poly(a) == poly({1, 3, 1}));  // x^2 + 3x + 1

  CHECK(char_poly(ExactMatrix::identity(3)) == poly({-1, 3, -3, 1}));
  CHECK(char_poly(ExactMatrix(2)) == poly({0, 0, 1}));

  // degree-3 cross-check against det(xI - A) assembled by hand
  ExactMatrix b = mat({{1, 2, 0}, {0, 1, -1}, {3, 0, 2}});
  // det(xI - B) via cofactors of the symbolic matrix, expanded by hand:
  // (x-1)[(x-1)(x-2) - 0*(-1)... ] -- instead evaluate both sides at points
  IntPolynomial cp = char_poly(b);
  for (long x = -3; x <= 3; ++x) {
    ExactMatrix xi = ExactMatrix::identity(3);
    ExactMatrix diff = Int(x) * xi - b;
    Int value = 0, xpow = 1;
    for (const Int& c : cp.coeff) {
      value += c * xpow;
      xpow *= x;
    }
    REQUIRE(value == det(diff));
  }
}

TEST_CASE("cyclotomic polynomials", "[exact]") {
  CHECK(cyclotomic(1) == poly({-1, 1}));
  CHECK(cyclotomic(2) == poly({1, 1}));
  CHECK(cyclotomic(3) == poly({1, 1, 1}));
  CHECK(cyclotomic(4) == poly({1, 0, 1}));
  CHECK(cyclotomic(6) == poly({1, -1, 1}));  // x^2 - x + 1
  CHECK(cyclotomic(12) == poly({1, 0, -1, 0, 1}));
  CHECK(cyclotomic(105).degree() == 48);  // first index with coefficient +-2
  CHECK_THROWS_AS(cyclotomic(0), PreconditionError);
  CHECK_THROWS_AS(cyclotomic(211), PreconditionError);

  for (unsigned long m = 1; m <= 24; ++m) {
    IntPolynomial product = poly({1});
    for (unsigned long d = 1; d <= m; ++d)
      if (m % d == 0) product = poly_mul(product, cyclotomic(d));
    std::vector<Int> xm(m + 1);
    xm[0] = -1;
    xm[m] = 1;
    REQUIRE(product == IntPolynomial(std::move(xm)));
  }
}

TEST_CASE("cyclotomic product recognition", "[exact]") {
  CHECK(is_cyclotomic_product(poly({1, -1, 1})));
  CHECK(is_cyclotomic_product(poly_mul(cyclotomic(4), cyclotomic(6))));
  CHECK(is_cyclotomic_product(poly_mul(cyclotomic(2), cyclotomic(2))));
  CHECK(is_cyclotomic_product(poly({1})));
  // x^2 + 3x + 1 has roots off the unit circle
  CHECK_FALSE(is_cyclotomic_product(poly({1, 3, 1})));
  CHECK_FALSE(is_cyclotomic_product(poly({2, 1})));   // not monic
  CHECK_FALSE(is_cyclotomic_product(poly({0, 1})));   // x is not cyclotomic
  CHECK_FALSE(is_cyclotomic_product(IntPolynomial()));
}
