#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace signcox;
using testutil::all_sign_patterns;
using testutil::cycle;
using testutil::line;
using testutil::mat;

TEST_CASE("bilinear form values", "[representation]") {
  // single +1 vertex
  CHECK(bilinear_form(from_edges({1}, {})) == mat({{2}}));
  // diag 2*sign, -1 across bonds, 0 across non-bonds
  CHECK(bilinear_form(line({1, -1, 1})) ==
        mat({{2, -1, 0}, {-1, -2, -1}, {0, -1, 2}}));
  CHECK(bilinear_form(cycle({-1, -1, -1})) ==
        mat({{-2, -1, -1}, {-1, -2, -1}, {-1, -1, -2}}));
  CHECK(det(bilinear_form(line({1, -1, 1}))) == -12);
}

TEST_CASE("reflection matrices", "[representation]") {
  // hand-computed for the 2-vertex line [+1, -1]:
  // pi_1 maps e1 -> -e1, e2 -> e2 + e1;  pi_2 maps e1 -> e1 - e2, e2 -> -e2
  Representation rep = make_representation(line({1, -1}));
  CHECK(rep.reflection(1) == mat({{-1, 1}, {0, 1}}));
  CHECK(rep.reflection(2) == mat({{1, 0}, {-1, -1}}));

  // the all-plus triangle taus, written out in full
  Representation tri = make_representation(cycle({1, 1, 1}));
  CHECK(tau(tri, 1) == mat({{-2, 1, 1}, {0, 0, 0}, {0, 0, 0}}));
  CHECK(tau(tri, 2) == mat({{0, 0, 0}, {1, -2, 1}, {0, 0, 0}}));
  CHECK(tau(tri, 3) == mat({{0, 0, 0}, {0, 0, 0}, {1, 1, -2}}));
  CHECK_THROWS_AS(tau(tri, 4), PreconditionError);

  std::vector<Int> nu1 = nu(make_representation(cycle({-1, -1, -1})), 1);
  CHECK(nu1 == std::vector<Int>{-2, -1, -1});
  std::vector<Int> nu2 = nu(make_representation(line({1, -1, 1})), 2);
  CHECK(nu2 == std::vector<Int>{-1, -2, -1});
}

TEST_CASE("reflections square to the identity and preserve the form",
          "[representation]") {
  auto check_graph = [](const SignedCoxeterGraph& g) {
    Representation rep = make_representation(g);
    ExactMatrix id = ExactMatrix::identity(rep.bform.dim());
    for (int i = 1; i <= g.n; ++i) {
      const ExactMatrix& pi = rep.reflection(i);
      REQUIRE(matmul(pi, pi) == id);
      REQUIRE(matmul(transpose(pi), matmul(rep.bform, pi)) == rep.bform);
    }
  };
  for (int n = 2; n <= 6; ++n)
    for (const auto& signs : all_sign_patterns(n)) check_graph(line(signs));
  for (int n = 3; n <= 6; ++n)
    for (const auto& signs : all_sign_patterns(n)) check_graph(cycle(signs));
  check_graph(from_edges({1, 1, -1, 1}, {{{1, 2, 3}}, {{1, 3, 3}}, {{1, 4, 3}}}));
}

TEST_CASE("tau is supported on one row", "[representation]") {
  auto check_graph = [](const SignedCoxeterGraph& g) {
    Representation rep = make_representation(g);
    for (int i = 1; i <= g.n; ++i) {
      ExactMatrix t = tau(rep, i);
      std::vector<Int> row = nu(rep, i);
      for (int r = 1; r <= g.n; ++r)
        for (int c = 1; c <= g.n; ++c) {
          Int expected = (r == i) ? row[static_cast<std::size_t>(c) - 1] : 0;
          REQUIRE(t(static_cast<std::size_t>(r) - 1,
                    static_cast<std::size_t>(c) - 1) == expected);
        }
    }
  };
  for (int n = 2; n <= 8; ++n)
    for (const auto& signs : all_sign_patterns(n)) check_graph(line(signs));
  for (int n = 3; n <= 6; ++n)
    for (const auto& signs : all_sign_patterns(n)) check_graph(cycle(signs));
}

TEST_CASE("degeneracy of cycle forms", "[representation]") {
  // degenerate exactly for all +1, or all -1 with even length
  for (int n = 3; n <= 10; ++n) {
    for (const auto& signs : all_sign_patterns(n)) {
      bool all_plus = true, all_minus = true;
      for (int s : signs) (s == 1 ? all_minus : all_plus) = false;
      const bool expect = all_plus || (all_minus && n % 2 == 0);
      REQUIRE(is_degenerate(make_representation(cycle(signs))) == expect);
    }
  }
}

TEST_CASE("line forms are never degenerate", "[representation]") {
  for (int n = 2; n <= 8; ++n)
    for (const auto& signs : all_sign_patterns(n))
      REQUIRE_FALSE(is_degenerate(make_representation(line(signs))));
}
