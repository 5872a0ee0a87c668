#include <doctest.h>

#include "helpers.hpp"

using namespace gdta;
using namespace gdta::test;

TEST_CASE("single-factor intersection numbers") {
  CHECK(gd_intersection_number(2, 2, 1, 1, 0) == 1);
  CHECK(gd_intersection_number(2, 2, 1, 1, 1) == 0);
  CHECK(gd_intersection_number(3, 3, 0, 0, 0) == 1);
  CHECK(gd_intersection_number(2, 3, 2, 2, 2) == 0);
  CHECK(gd_intersection_number(3, 4, 2, 2, 0) == 8);
  CHECK(gd_intersection_number(3, 4, 2, 2, 1) == 8);
  CHECK(gd_intersection_number(3, 4, 1, 1, 1) == 2);
  CHECK(gd_intersection_number(3, 4, 1, 2, 2) == 3);
  CHECK(gd_intersection_number(5, 2, 0, 1, 1) == 1);
  CHECK(gd_intersection_number(5, 2, 0, 1, 2) == 0);
  CHECK_THROWS_AS(gd_intersection_number(1, 2, 0, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(gd_intersection_number(2, 1, 0, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(gd_intersection_number(2, 2, 3, 0, 0), std::invalid_argument);
}

TEST_CASE("product intersection numbers multiply over factors") {
  GDParams params = P("2x3,3x3", 0);
  CHECK(intersection_number(params, col({1, 2}), col({0, 2}), col({1, 2})) == 3);

  GDParams one = P("2x2", 0);
  CHECK(intersection_number(one, col({1}), col({1}), col({0})) == 1);

  // identity relation composed with anything is a delta
  for (const Color& j : enumerate_colors(params))
    for (const Color& k : enumerate_colors(params)) {
      mpz_class v = intersection_number(params, Color{}, j, k);
      CHECK(v == (j == k ? 1 : 0));
    }

  Color overflow;
  overflow.ones = 1ull << 10;
  CHECK_THROWS_AS(intersection_number(one, overflow, Color{}, Color{}), std::invalid_argument);
}

TEST_CASE("valencies") {
  GDParams params = P("2x3", 0);
  CHECK(valency(params, col({1})) == 2);
  CHECK(valency(params, col({2})) == 3);
  CHECK(valency(params, col({0})) == 1);

  for (const std::string& text : {"2x2", "2x3", "3x2", "3x3", "2x3,3x3", "4x5,2x2"}) {
    GDParams q = P(text, 0);
    mpz_class total = 0;
    for (const Color& g : enumerate_colors(q)) {
      CHECK(valency(q, g) == intersection_number(q, g, g, Color{}));
      total += valency(q, g);
    }
    CHECK(total == q.vertex_count());
  }
}

TEST_CASE("p'-valenced predicate") {
  CHECK_FALSE(is_p_prime_valenced(P("2x2", 2)));
  CHECK(is_p_prime_valenced(P("2x3,3x3", 5)));
  CHECK_FALSE(is_p_prime_valenced(P("2x3,3x3", 2)));
  CHECK_FALSE(is_p_prime_valenced(P("2x3,3x3", 3)));
  CHECK(is_p_prime_valenced(P("2x2", 0)));
  CHECK(is_p_prime_valenced(P("4x5", 11)));
  CHECK_FALSE(is_p_prime_valenced(P("4x5", 3)));  // divides groups - 1
}

TEST_CASE("support predicate matches positivity of the intersection number") {
  CHECK(support_nonzero(P("2x2", 0), Color{}, Color{}, Color{}));
  CHECK_FALSE(support_nonzero(P("2x2", 0), col({1}), col({1}), col({1})));

  for (const std::string& text : {"2x2", "3x2", "2x3", "3x3", "2x3,3x3", "2x2,2x2", "4x5,3x2"}) {
    GDParams params = P(text, 0);
    std::vector<Color> colors = enumerate_colors(params);
    for (const Color& g : colors)
      for (const Color& h : colors)
        for (const Color& i : colors)
          CHECK(support_nonzero(params, g, h, i) == (intersection_number(params, g, h, i) > 0));
  }
}

TEST_CASE("row sums of the adjacency algebra") {
  for (const std::string& text : {"2x2", "2x3", "3x3", "2x3,3x3"}) {
    GDParams params = P(text, 0);
    std::vector<Color> colors = enumerate_colors(params);
    for (const Color& g : colors)
      for (const Color& h : colors) {
        mpz_class sum = 0;
        for (const Color& i : colors)
          sum += intersection_number(params, g, h, i) * valency(params, i);
        CHECK(sum == valency(params, g) * valency(params, h));
      }
  }
}

TEST_CASE("color enumeration order and sizes") {
  GDParams one = P("2x3", 0);
  std::vector<Color> c1 = enumerate_colors(one);
  REQUIRE(c1.size() == 3);
  CHECK(c1[0] == col({0}));
  CHECK(c1[1] == col({1}));
  CHECK(c1[2] == col({2}));

  GDParams two = P("2x3,3x3", 0);
  std::vector<Color> c2 = enumerate_colors(two);
  REQUIRE(c2.size() == 9);
  CHECK(c2[0] == col({0, 0}));
  CHECK(c2[1] == col({0, 1}));
  CHECK(c2[3] == col({1, 0}));
  CHECK(std::is_sorted(c2.begin(), c2.end(), ColorLess{}));
}

TEST_CASE("support set sizes from the anchor masks") {
  for (const std::string& text : {"2x3,3x3", "3x3,4x4", "2x2,2x3"}) {
    GDParams params = P(text, 0);
    std::vector<Color> colors = enumerate_colors(params);
    for (const Color& g : colors)
      for (const Color& h : colors) {
        std::size_t i = std::popcount(g.ones & h.ones & params.m_gt2_mask());
        std::size_t j = std::popcount(g.twos & h.twos & params.ell_gt2_mask());
        std::size_t k = std::popcount(g.twos & h.twos);
        std::size_t expect = (1ull << (i + k - j)) * [](std::size_t e) {
          std::size_t r = 1;
          while (e--) r *= 3;
          return r;
        }(j);
        CHECK(enumerate_P(params, g, h).size() == expect);
      }
  }
}

TEST_CASE("parameter literals") {
  std::vector<Factor> f = parse_factors("2x3,3x3");
  REQUIRE(f.size() == 2);
  CHECK(f[0].groups == 2);
  CHECK(f[0].group_size == 3);
  CHECK(f[1].groups == 3);
  CHECK(format_factors(f) == "2x3,3x3");
  CHECK_THROWS_AS(parse_factors("2x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_factors("x3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_factors("1x3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_factors("2x3,,3x3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_factors(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_factors("abc"), std::invalid_argument);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(GDParams({{1, 2}}, 0), std::invalid_argument);
  CHECK_THROWS_AS(GDParams({{2, 2}}, 4), std::invalid_argument);
  CHECK_THROWS_AS(GDParams({}, 0), std::invalid_argument);
  CHECK_THROWS_AS(GDParams(std::vector<Factor>(63, Factor{2, 2}), 0), std::invalid_argument);
  GDParams ok = P("2x3,3x3", 3);
  auto [n1, n2, n3, n4] = ok.shape_counts();
  CHECK(n1 == 0);
  CHECK(n2 == 0);
  CHECK(n3 == 1);
  CHECK(n4 == 1);
  CHECK(ok.vertex_count() == 54);
  GDParams mixed = P("2x2,5x2,2x7,4x4", 0);
  auto [m1, m2, m3, m4] = mixed.shape_counts();
  CHECK(m1 == 1);
  CHECK(m2 == 1);
  CHECK(m3 == 1);
  CHECK(m4 == 1);
}
